#pragma once

#include <string>
#include <vector>

#include "semigor/canonical.hpp"

namespace semigor {

const char* bool3_name(Bool3 b);

struct ClassificationReport {
    bool gorenstein = false;
    bool quasi_gorenstein = false;
    bool pseudo_gorenstein = false;
    bool level = false;
    bool nearly_gorenstein = false;
    Bool3 natural_condition = Bool3::Unknown;  // radical of the degree-indeg trace part covers m
    Bool3 semi_standard = Bool3::Unknown;      // degree-indeg ring elements generate an m-primary ideal
    int cm_type = 0;
    Coord a_invariant = 0;
    Coord indeg_maximal = 0;
    std::vector<Coord> omega_generator_degrees;
    std::vector<Vec> omega_generators;
    std::vector<Vec> trace_generators;
    bool canonical_verified = false;
};

ClassificationReport classify(const RingPtr& ring, const CanonicalModule& canonical);

// Number of semigroup elements of degree n.
Coord hilbert_function(const RingPtr& ring, Coord n);

struct HVectorReport {
    std::vector<Coord> h;
    Coord socle_degree = 0;
    int krull_dim = 0;
    Coord multiplicity = 0;           // sum of h
    bool minimal_multiplicity = false;  // socle degree <= 1
};

// Hilbert-series numerator over (1-t)^dim, accepted only after a window of
// dim + s + 8 zero coefficients past the last nonzero one. Requires the
// (indeg-generalized) semi-standard property; fails with the irreducible
// witness otherwise.
HVectorReport h_vector(const RingPtr& ring);

}  // namespace semigor
