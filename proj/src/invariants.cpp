#include "semigor/invariants.hpp"

#include <algorithm>

namespace semigor {

const char* bool3_name(Bool3 b) {
    switch (b) {
        case Bool3::False: return "false";
        case Bool3::True: return "true";
        case Bool3::Unknown: return "unknown";
    }
    return "unknown";
}

ClassificationReport classify(const RingPtr& ring, const CanonicalModule& canonical) {
    const MonomialModule& omega = canonical.module;
    if (!omega.ring()->same_ring(*ring))
        raise(ErrorKind::InvalidArgument, "canonical module belongs to a different ring");

    ClassificationReport report;
    report.canonical_verified = canonical.verified;
    report.cm_type = static_cast<int>(omega.generators().size());
    report.gorenstein = report.cm_type == 1;
    report.pseudo_gorenstein = min_degree_dim(omega) == 1;
    report.a_invariant = a_invariant(omega);
    report.omega_generators = omega.generators();
    report.omega_generator_degrees = omega.generator_degrees();
    report.level = report.omega_generator_degrees.front() == report.omega_generator_degrees.back();

    MonomialModule trace = trace_module(omega);
    report.trace_generators = trace.generators();
    report.quasi_gorenstein = trace.is_whole_ring();

    report.nearly_gorenstein = true;
    for (const Vec& g : ring->minimal_generators())
        if (!trace.contains(g)) {
            report.nearly_gorenstein = false;
            break;
        }

    report.indeg_maximal = ring->indeg();

    std::vector<Vec> trace_slice = trace.elements_of_degree(report.indeg_maximal);
    report.natural_condition =
        radical_test(ring, trace_slice, {}, ring->limits().radical_cap).m_primary;

    std::vector<Vec> ring_slice = ring->elements_of_degree(report.indeg_maximal);
    report.semi_standard = radical_test(ring, ring_slice, {}, ring->limits().radical_cap).m_primary;

    return report;
}

Coord hilbert_function(const RingPtr& ring, Coord n) {
    if (n < 0) raise(ErrorKind::InvalidArgument, "Hilbert function at negative degree");
    return static_cast<Coord>(ring->count_of_degree(n));
}

HVectorReport h_vector(const RingPtr& ring) {
    Coord indeg = ring->indeg();
    RadicalVerdict verdict =
        radical_test(ring, ring->elements_of_degree(indeg), ring->minimal_generators(),
                     ring->limits().radical_cap);
    if (verdict.m_primary != Bool3::True) {
        for (const RadicalEntry& e : verdict.entries)
            if (e.answer != RadicalAnswer::Yes)
                throw Error(ErrorKind::NotSemiStandard,
                            "NotSemiStandard: " + vec_to_string(e.target) +
                                " is not reducible by degree-" + std::to_string(indeg) +
                                " elements" +
                                (e.answer == RadicalAnswer::Unknown ? " (undecided at cap)" : ""),
                            e.target);
        raise(ErrorKind::NotSemiStandard, "degree-" + std::to_string(indeg) +
                                              " elements do not generate an m-primary ideal");
    }

    const int dim = ring->dim();
    const Coord cap = ring->limits().stabilization_cap;

    Coord truncation = 16;
    std::vector<Coord> coeffs;
    Coord socle = 0;
    while (true) {
        if (truncation > cap)
            raise(ErrorKind::StabilizationFailed,
                  "Hilbert numerator did not stabilize below degree " + std::to_string(cap));
        std::vector<Coord> counts(static_cast<std::size_t>(truncation) + 1, 0);
        for (Coord n = 0; n <= truncation; ++n)
            counts[static_cast<std::size_t>(n)] = static_cast<Coord>(ring->count_of_degree(n));

        // dim-fold forward difference: coefficients of Hilb(t) * (1-t)^dim.
        coeffs = counts;
        for (int round = 0; round < dim; ++round)
            for (Coord i = truncation; i >= 1; --i)
                coeffs[static_cast<std::size_t>(i)] =
                    checked_sub(coeffs[static_cast<std::size_t>(i)],
                                coeffs[static_cast<std::size_t>(i - 1)]);

        socle = 0;
        for (Coord i = 0; i <= truncation; ++i)
            if (coeffs[static_cast<std::size_t>(i)] != 0) socle = i;

        Coord needed = checked_add(socle, checked_add(static_cast<Coord>(dim), checked_add(socle, 8)));
        if (truncation >= needed) break;
        truncation = needed;
    }

    HVectorReport report;
    report.h.assign(coeffs.begin(), coeffs.begin() + socle + 1);
    report.socle_degree = socle;
    report.krull_dim = dim;
    report.multiplicity = 0;
    for (Coord c : report.h) report.multiplicity = checked_add(report.multiplicity, c);
    report.minimal_multiplicity = socle <= 1;
    if (report.h.front() != 1)
        raise(ErrorKind::InvalidArgument, "Hilbert numerator does not start at 1");
    return report;
}

}  // namespace semigor
