#pragma once

#include <vector>

#include "semigor/semigroup.hpp"

namespace semigor {

// Cofinite subsemigroup of N with full profile. N itself is the degenerate
// case F = -1, PF = {-1}, so the canonical-module construction lands on the
// polynomial ring without special-casing.
struct NumericalSemigroup {
    std::vector<Coord> generators;   // minimal generating set, sorted
    Coord multiplicity = 1;
    Coord frobenius = -1;
    std::vector<Coord> gaps;
    Coord genus = 0;
    std::vector<Coord> apery;        // Apery set w.r.t. the multiplicity, size = multiplicity
    std::vector<Coord> pseudo_frobenius;
    Coord type = 1;                  // |PF|
    bool symmetric = true;
    bool almost_symmetric = true;    // 2 genus == frobenius + type

    bool contains(Coord n) const;
};

// Validates (positive entries, gcd 1) and computes the full profile.
// The two classification flags come from independent routes: symmetric by
// gap duality, almost_symmetric by the 2g = F + t count.
NumericalSemigroup numerical_profile(std::vector<Coord> generators);

// d = 1 semigroup ring with identity grading.
RingPtr to_ring(const NumericalSemigroup& ns, Limits limits = {});

}  // namespace semigor
