#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semigor/numerical.hpp"
#include "semigor/veronese.hpp"

namespace semigor {

// Deterministic splittable generator; every campaign instance derives its own
// stream from (seed, index) so evaluation order never matters.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t next();
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    Coord range(Coord lo, Coord hi);  // inclusive
    bool chance(int numerator, int denominator);

  private:
    std::uint64_t state_;
};

enum class TheoremId { T1, T2, T3, T4, T5, T6 };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

// Structural ring description, the serializable half of an instance.
struct RingSpecData {
    std::string label;
    std::optional<std::vector<Coord>> numerical;  // shorthand for d = 1
    int dim = 0;
    std::vector<Vec> generators;
    Vec grading_weights;
    std::optional<std::vector<Vec>> canonical_generators;

    RingPtr build(const Limits& limits) const;
    static RingSpecData of_ring(const AffineSemigroupRing& ring, std::string label);
};

struct TheoremWitnesses {
    std::vector<Vec> ideal_gens;
    Vec f1, f2, theta1, theta2;
};

struct TheoremInstance {
    TheoremId id = TheoremId::T1;
    RingSpecData ring;
    Coord k = 0;  // T4 and T6
    std::optional<TheoremWitnesses> witnesses;  // T5
};

struct TheoremInstanceResult {
    std::vector<std::pair<std::string, Bool3>> hypotheses;
    Bool3 hypotheses_met = Bool3::Unknown;
    Bool3 conclusion = Bool3::Unknown;  // Unknown when not evaluated
    bool counterexample = false;
    bool errored = false;
    std::string note;
};

TheoremInstanceResult check_theorem(const TheoremInstance& instance, const Limits& limits = {});
// Variant reusing an already-built ring (campaign fast path).
TheoremInstanceResult check_theorem(const TheoremInstance& instance, const RingPtr& ring);

// Seeded families -------------------------------------------------------

NumericalSemigroup random_numerical(SplitMix64& rng, Coord max_multiplicity, Coord max_frobenius);

// All numerical semigroups with multiplicity <= m0 and Frobenius <= f0,
// in deterministic tree order.
std::vector<NumericalSemigroup> exhaustive_numerical(Coord max_multiplicity, Coord max_frobenius);

// Hilbert basis of a random pointed cone with rays (1,0) and (p,q), plus a
// random grading positive on the basis. Normal by construction.
RingPtr random_normal_2d(SplitMix64& rng, Coord max_slope_coord, Coord grading_range,
                         const Limits& limits = {});

// Standard graded cone over a lattice segment [0, width], unimodularly
// sheared; every generator sits in degree one.
RingPtr segment_ring(Coord width, Coord shear, const Limits& limits = {});

// Campaign ---------------------------------------------------------------

struct CampaignConfig {
    std::uint64_t seed = 42;
    int count = 500;
    std::vector<TheoremId> theorems = {TheoremId::T1, TheoremId::T2, TheoremId::T3,
                                       TheoremId::T5, TheoremId::T6};
    std::string family = "mixed2d";  // mixed2d | cone2d | segment | numerical
    Coord slope_bound = 6;
    Coord grading_range = 3;
    Coord max_multiplicity = 6;
    Coord max_frobenius = 30;
    Coord segment_max = 6;
    bool parallel = true;
    Limits limits;
};

struct TheoremTally {
    long instances = 0;
    long hypotheses_met = 0;
    long vacuous = 0;          // some hypothesis exactly false
    long vacuous_unknown = 0;  // undecided hypothesis (radical caps)
    long conclusion_verified = 0;
    long counterexamples = 0;
    long errors = 0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<std::pair<TheoremId, TheoremTally>> tallies;
    std::vector<TheoremInstance> counterexample_instances;
    std::vector<TheoremInstanceResult> counterexample_results;
    std::string digest;  // order-independent of scheduling: folded by index
    long total_counterexamples = 0;
    long total_errors = 0;
    double elapsed_seconds = 0;  // informational; never serialized
};

// One ring per index plus theorem-specific extras; exposed for tests.
struct GeneratedInstance {
    RingSpecData spec;
    RingPtr ring;
    Coord veronese_k = 2;
    std::optional<TheoremWitnesses> witnesses;
};

GeneratedInstance generate_instance(const CampaignConfig& config, int index);

CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace semigor
