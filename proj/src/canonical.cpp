#include "semigor/canonical.hpp"

#include <algorithm>

#include "semigor/numerical.hpp"

namespace semigor {

namespace {

CanonicalModule canonical_numerical(const RingPtr& ring) {
    std::vector<Coord> numbers;
    for (const Vec& u : ring->internal_generators()) numbers.push_back(u[0]);
    NumericalSemigroup ns = numerical_profile(std::move(numbers));
    std::vector<Vec> gens;
    for (Coord f : ns.pseudo_frobenius) gens.push_back(ring->to_ambient(Vec{-f}));
    return {MonomialModule::from_minimal(ring, std::move(gens)), true};
}

CanonicalModule canonical_free(const RingPtr& ring) {
    Vec ones(static_cast<std::size_t>(ring->dim()), 1);
    return {MonomialModule::from_minimal(ring, {ring->to_ambient(ones)}), true};
}

// Interior lattice points of the cone form an S-module whose minimal
// generators all lie below the parallelepiped bound: any interior point
// decomposes as an interior point of the fundamental parallelepiped shifted
// by rays plus a semigroup element.
CanonicalModule canonical_normal_2d(const RingPtr& ring) {
    const Cone2D& cone = ring->cone_internal();
    const Grading& grading = ring->internal_grading();

    Coord ppd_max = 0;
    for (const Vec& p : cone.parallelepiped_points()) ppd_max = std::max(ppd_max, grading.degree(p));
    Coord provable_bound = checked_add(
        ppd_max, checked_add(grading.degree(cone.ray_low()), grading.degree(cone.ray_high())));

    Coord window = 1;
    for (const Vec& g : ring->internal_generators()) window = std::max(window, grading.degree(g));

    std::vector<Vec> gens_internal;
    Coord last_new = 0;
    for (Coord n = 1;; ++n) {
        bool found = false;
        for (const Vec& u : ring->slice_internal(n)) {
            if (cone.position(u).region != ConeRegion::Interior) continue;
            bool covered = false;
            for (const Vec& g : gens_internal)
                if (ring->membership_internal(vec_sub(u, g))) {
                    covered = true;
                    break;
                }
            if (!covered) {
                gens_internal.push_back(u);
                found = true;
            }
        }
        if (found) last_new = n;
        if (n >= provable_bound && n >= checked_add(last_new, window)) break;
    }

    std::vector<Vec> gens;
    for (const Vec& u : gens_internal) gens.push_back(ring->to_ambient(u));
    return {MonomialModule::from_minimal(ring, std::move(gens)), true};
}

}  // namespace

CanonicalModule canonical_module(const RingPtr& ring) {
    if (ring->dim() == 1) return canonical_numerical(ring);
    if (ring->is_free()) return canonical_free(ring);
    if (ring->dim() == 2 && ring->is_normal()) return canonical_normal_2d(ring);
    raise(ErrorKind::UnsupportedRing,
          "no combinatorial canonical module for " + ring->describe() +
              "; supply canonical generators explicitly");
}

CanonicalModule user_canonical(const RingPtr& ring, const std::vector<Vec>& gens) {
    return {minimize_generators(ring, gens), false};
}

Coord a_invariant(const MonomialModule& module) {
    return checked_sub(0, module.min_degree());
}

Coord a_invariant(const CanonicalModule& canonical) { return a_invariant(canonical.module); }

int min_degree_dim(const MonomialModule& module) {
    Coord mindeg = module.min_degree();
    int count = 0;
    for (const Vec& g : module.generators())
        if (module.ring()->degree(g) == mindeg) ++count;
    return count;
}

}  // namespace semigor
