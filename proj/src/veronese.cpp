#include "semigor/veronese.hpp"

#include <algorithm>

namespace semigor {

namespace {

// Degree-ascending irreducible-element discovery shared by the ring and
// module Veronese constructions. `elements(n)` lists the source elements of
// source-degree n; `reducible(v, found)` must only rely on found generators
// of strictly smaller degree.
struct DiscoveryResult {
    std::vector<Vec> generators;
    Coord bound = 0;
};

template <class Elements, class Reducible>
DiscoveryResult discover(Coord start, Coord step, Coord bound, Coord sweep_width,
                         const Elements& elements, const Reducible& reducible,
                         const std::string& what) {
    DiscoveryResult result;
    result.bound = bound;
    for (Coord n = start; n <= bound; n += step)
        for (const Vec& v : elements(n))
            if (!reducible(v, result.generators)) result.generators.push_back(v);

    for (Coord n = bound + step; n <= checked_add(bound, sweep_width); n += step)
        for (const Vec& v : elements(n))
            if (!reducible(v, result.generators))
                raise(ErrorKind::WindowUnstable,
                      what + " window up to degree " + std::to_string(bound) +
                          " missed generator " + vec_to_string(v) + "; raise the window factor");
    return result;
}

}  // namespace

namespace {

// Pigeonhole generation bound: an element of degree > k * (sum of minimal
// generator degrees) repeats some ring generator more than k times, so k
// copies of that generator split off inside the Veronese subring. Everything
// beyond the bound is therefore reducible; the sweep below is a cheap extra
// guard against implementation slips, not a correctness requirement.
Coord generator_degree_sum(const RingPtr& ring) {
    Coord sum = 0;
    for (const Vec& g : ring->minimal_generators()) sum = checked_add(sum, ring->degree(g));
    return sum;
}

}  // namespace

RingPtr veronese_ring(const RingPtr& ring, Coord k) {
    if (k < 1) raise(ErrorKind::InvalidArgument, "Veronese exponent must be positive");
    if (k == 1) return ring;

    const Coord factor = std::max<Coord>(1, ring->limits().veronese_factor);
    const Coord maxgen = ring->max_generator_degree();
    const Coord bound = checked_mul(k, checked_mul(generator_degree_sum(ring), factor));
    const Coord sweep = checked_mul(k, checked_add(maxgen, 1));

    if (checked_add(bound, sweep) > ring->degree_cap())
        raise(ErrorKind::DegreeCapExceeded, "Veronese discovery needs degree " +
                                                std::to_string(bound + sweep) + " > cap " +
                                                std::to_string(ring->degree_cap()));
    ring->count_of_degree(checked_add(bound, sweep));

    auto elements = [&](Coord n) { return ring->elements_of_degree(n); };
    auto reducible = [&](const Vec& v, const std::vector<Vec>& found) {
        for (const Vec& g : found)
            if (ring->membership(vec_sub(v, g))) return true;
        return false;
    };
    DiscoveryResult disc = discover(k, k, bound, sweep, elements, reducible, "Veronese generator");

    auto lattice = LatticeBasis::from_generators(ring->dim(), disc.generators);
    if (!lattice)
        raise(ErrorKind::InvalidArgument, "Veronese generators span a rank-deficient group");

    Grading grading{ring->grading().weights, checked_mul(ring->grading().divisor, k)};
    std::vector<Vec> minimal = disc.generators;
    sort_deg_lex(grading, minimal);
    return AffineSemigroupRing::create_on_lattice(ring->dim(), disc.generators, grading,
                                                  std::move(*lattice), ring->limits(),
                                                  std::move(minimal));
}

MonomialModule veronese_module(const MonomialModule& module, Coord k, const RingPtr& veronese) {
    if (k < 1) raise(ErrorKind::InvalidArgument, "Veronese exponent must be positive");
    const RingPtr& ring = module.ring();
    if (k == 1) return module;
    if (!veronese)
        raise(ErrorKind::InvalidArgument, "veronese_module needs the Veronese ring");

    const Coord factor = std::max<Coord>(1, ring->limits().veronese_factor);
    const Coord maxgen = ring->max_generator_degree();
    Coord start = module.min_degree();
    // Round up to the next multiple of k (degrees may be negative).
    Coord rem = ((start % k) + k) % k;
    if (rem != 0) start = checked_add(start, k - rem);

    // Same pigeonhole bound as the ring discovery, shifted by the module's
    // top generator degree.
    Coord span = checked_add(checked_sub(module.max_degree(), start),
                             checked_mul(k, checked_mul(generator_degree_sum(ring), factor)));
    span = checked_mul(k, (span + k - 1) / k);
    const Coord bound = checked_add(start, span);
    const Coord sweep = checked_mul(k, checked_add(maxgen, 1));

    Coord deepest = checked_add(bound, sweep);
    if (checked_sub(deepest, module.min_degree()) > ring->degree_cap())
        raise(ErrorKind::DegreeCapExceeded,
              "Veronese module discovery needs ring degree " +
                  std::to_string(deepest - module.min_degree()) + " > cap " +
                  std::to_string(ring->degree_cap()));

    auto elements = [&](Coord n) { return module.elements_of_degree(n); };
    auto reducible = [&](const Vec& v, const std::vector<Vec>& found) {
        for (const Vec& g : found)
            if (veronese->membership(vec_sub(v, g))) return true;
        return false;
    };
    DiscoveryResult disc =
        discover(start, k, bound, sweep, elements, reducible, "Veronese submodule");
    return MonomialModule::from_minimal(veronese, std::move(disc.generators));
}

VeroneseCheck okokok_check(const RingPtr& ring, Coord k) {
    VeroneseCheck check;

    bool standard = ring->indeg() == 1 && ring->max_generator_degree() == 1;
    check.hypotheses.emplace_back("standard_graded", bool3_of(standard));

    bool depth_ok = false;
    if (ring->dim() >= 2) {
        // Normality stands in for the depth >= 2 hypothesis: a normal
        // semigroup ring is Cohen-Macaulay, so depth equals dimension.
        try {
            depth_ok = ring->is_normal();
        } catch (const Error&) {
            depth_ok = false;
        }
    }
    check.hypotheses.emplace_back("normal_dim_ge_2", bool3_of(depth_ok));

    CanonicalModule omega = canonical_module(ring);
    Coord a = a_invariant(omega);
    check.hypotheses.emplace_back("a_invariant_in_kZ", bool3_of(a % k == 0));

    bool nearly = true;
    MonomialModule trace = trace_module(omega.module);
    for (const Vec& g : ring->minimal_generators())
        if (!trace.contains(g)) {
            nearly = false;
            break;
        }
    check.hypotheses.emplace_back("trace_contains_maximal_ideal", bool3_of(nearly));

    check.hypotheses.emplace_back("min_degree_dim_one", bool3_of(min_degree_dim(omega.module) == 1));

    check.hypotheses_met = std::all_of(check.hypotheses.begin(), check.hypotheses.end(),
                                       [](const auto& h) { return h.second == Bool3::True; });

    check.veronese = veronese_ring(ring, k);
    CanonicalModule omega_v{veronese_module(omega.module, k, check.veronese), omega.verified};
    check.omega_veronese = omega_v;
    MonomialModule trace_v = trace_module(omega_v.module);
    check.conclusion = bool3_of(trace_v.is_whole_ring());
    return check;
}

}  // namespace semigor
