#pragma once

#include "semigor/modules.hpp"

namespace semigor {

// Canonical module plus provenance: constructions the library can certify
// (interior points, pseudo-Frobenius numbers) are verified; user-supplied
// generator lists are not, and every downstream report says so.
struct CanonicalModule {
    MonomialModule module;
    bool verified = false;
};

// Combinatorial canonical module:
//   d = 1            module generated by {-f : f in PF(S)}, so a_R = F(S)
//   free N^d         the all-ones interior generator
//   normal d = 2     minimal interior lattice points of the cone
// Anything else needs user_canonical.
CanonicalModule canonical_module(const RingPtr& ring);

CanonicalModule user_canonical(const RingPtr& ring, const std::vector<Vec>& gens);

// -(minimum generator degree); the module minimum is attained at a generator.
Coord a_invariant(const CanonicalModule& canonical);
Coord a_invariant(const MonomialModule& module);

// Number of lattice points of the module in its minimum degree; equals the
// number of minimum-degree generators because same-degree points are
// incomparable.
int min_degree_dim(const MonomialModule& module);

}  // namespace semigor
