#pragma once

#include <string>
#include <vector>

#include "semigor/semigroup.hpp"

namespace semigor {

// Finitely generated monomial fractional ideal over an affine semigroup
// ring: the S-module generated in Z^d by its (pairwise incomparable,
// deg-lex sorted) generators. Generators live on the ring lattice but need
// not lie in S; degrees may be negative.
class MonomialModule {
  public:
    static MonomialModule from_minimal(RingPtr ring, std::vector<Vec> minimal_gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Vec>& generators() const { return gens_; }
    bool is_ideal() const { return is_ideal_; }
    bool is_principal() const { return gens_.size() == 1; }
    // R presented as a module over itself: the single generator 0.
    bool is_whole_ring() const { return gens_.size() == 1 && is_zero(gens_.front()); }

    Coord min_degree() const;
    Coord max_degree() const;
    std::vector<Coord> generator_degrees() const;  // sorted ascending

    bool contains(const Vec& v) const;

    // Module elements of the given degree, ambient, sorted.
    std::vector<Vec> elements_of_degree(Coord n) const;

    std::string describe() const;

  private:
    MonomialModule() = default;
    RingPtr ring_;
    std::vector<Vec> gens_;
    bool is_ideal_ = false;
};

// Removes every generator reachable from another one through S; the result
// is the unique minimal generating set, deg-lex sorted.
MonomialModule minimize_generators(RingPtr ring, const std::vector<Vec>& raw);

inline bool module_membership(const MonomialModule& m, const Vec& v) { return m.contains(v); }

// Module generated by all pairwise generator sums, minimized.
MonomialModule multiply_modules(const MonomialModule& a, const MonomialModule& b);

// I^{-1} = { v : v + I is contained in S }, computed over a bounded degree
// window followed by a stability sweep of equal evidence; an unstable window
// fails loudly rather than truncating silently.
MonomialModule inverse_module(const MonomialModule& ideal);

// tr(I) = I * I^{-1}; always an ideal.
MonomialModule trace_module(const MonomialModule& ideal);

}  // namespace semigor
