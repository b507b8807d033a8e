#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semigor/lattice.hpp"

namespace semigor {

struct Limits {
    Coord degree_cap = 512;        // membership queries beyond this degree fail loudly
    Coord radical_cap = 64;        // power search bound in radical tests
    Coord inverse_slack = 8;       // additive slack on the inverse-module window
    Coord veronese_factor = 1;     // multiplier on the provable Veronese discovery bound
    Coord stabilization_cap = 512; // Hilbert-series truncation bound
};

class AffineSemigroupRing;
using RingPtr = std::shared_ptr<const AffineSemigroupRing>;

// Positively graded monomial domain given by semigroup generators in Z^d.
//
// Generators are exposed in ambient coordinates. Internally the ring is
// re-embedded onto a basis of the group L the generators span, so that
// membership slices, Hilbert bases and interior-point enumeration always run
// on a full-rank lattice with an integral grading. User-constructed rings
// must have L = Z^d (construction fails otherwise); Veronese subrings carry
// a non-trivial lattice basis.
//
// Immutable after construction except the degree-slice memo, which fills
// idempotently under a shared mutex; all members are safe for concurrent use.
class AffineSemigroupRing {
  public:
    int dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return gens_ambient_; }
    const Grading& grading() const { return grading_; }
    Coord degree_cap() const { return limits_.degree_cap; }
    const Limits& limits() const { return limits_; }
    const LatticeBasis& lattice() const { return lattice_; }
    Coord lattice_index() const { return lattice_.index(); }

    // Degree of an ambient lattice vector under the ring grading.
    Coord degree(const Vec& v) const { return grading_.degree(v); }

    bool membership(const Vec& v) const;

    // All semigroup elements of the given degree, ambient coordinates,
    // sorted lexicographically.
    std::vector<Vec> elements_of_degree(Coord n) const;
    std::size_t count_of_degree(Coord n) const;

    // The unique minimal generating set, sorted by (degree, lex).
    const std::vector<Vec>& minimal_generators() const;
    // Minimum generator degree: indeg of the graded maximal ideal.
    Coord indeg() const;
    Coord max_generator_degree() const;

    bool is_free() const { return free_; }
    bool is_normal() const;

    // d == 2 only.
    const Cone2D& cone_ambient() const;
    const Cone2D& cone_internal() const;

    // Conversions between ambient coordinates and the internal full-rank
    // lattice coordinates. to_internal is empty off the lattice L.
    std::optional<Vec> to_internal(const Vec& v) const { return lattice_.to_internal(v); }
    Vec to_ambient(const Vec& u) const { return lattice_.to_ambient(u); }
    const std::vector<Vec>& internal_generators() const { return gens_internal_; }
    const Grading& internal_grading() const { return grading_internal_; }

    bool membership_internal(const Vec& u) const;
    const std::vector<Vec>& slice_internal(Coord n) const;

    // Degree scale used by window heuristics: max Hilbert-basis degree for
    // d <= 2, max minimal-generator degree otherwise.
    Coord window_scale() const;

    bool same_ring(const AffineSemigroupRing& other) const;

    std::string describe() const;

    // Validated user construction; requires the generators to span Z^d as a
    // group and the grading to be positive on every generator.
    static RingPtr create(int dim, std::vector<Vec> generators, Grading grading, Limits limits = {});

    // Internal constructor for subrings living on a sublattice (Veronese);
    // skips the full-group requirement. minimal_gens, when supplied, seeds
    // the cache with an already-discovered minimal generating set.
    static RingPtr create_on_lattice(int dim, std::vector<Vec> generators, Grading grading,
                                     LatticeBasis lattice, Limits limits,
                                     std::optional<std::vector<Vec>> minimal_gens = std::nullopt);

  private:
    AffineSemigroupRing() = default;

    void finish_construction(std::optional<std::vector<Vec>> minimal_gens);
    void ensure_slices(Coord n) const;

    int dim_ = 0;
    std::vector<Vec> gens_ambient_;   // lexicographically sorted, deduplicated
    Grading grading_;
    Limits limits_;
    LatticeBasis lattice_ = LatticeBasis::identity(0);
    std::vector<Vec> gens_internal_;  // same order as gens_ambient_
    Grading grading_internal_;
    bool free_ = false;

    std::optional<Cone2D> cone_ambient_;
    std::optional<Cone2D> cone_internal_;

    // slices_[n]: internal elements of degree n, sorted. Slots are
    // pre-allocated up to the degree cap and filled monotonically; a slice
    // below the watermark is immutable and readable without any lock, so
    // concurrent membership queries never contend.
    mutable std::vector<std::unique_ptr<std::vector<Vec>>> slices_;
    mutable std::atomic<Coord> slices_filled_{0};
    mutable std::mutex slice_fill_mutex_;

    mutable std::once_flag minimal_once_;
    mutable std::vector<Vec> minimal_gens_;

    mutable std::once_flag normal_once_;
    mutable bool normal_ = false;
};

inline RingPtr new_ring(int dim, std::vector<Vec> generators, Grading grading, Limits limits = {}) {
    return AffineSemigroupRing::create(dim, std::move(generators), std::move(grading), limits);
}

enum class RadicalAnswer { No, Yes, Unknown };

struct RadicalEntry {
    Vec target;
    RadicalAnswer answer;
    Coord power = 0;  // witness k for Yes: k*target lies in the ideal module
    // For an exact No on a boundary target: the extreme ray carrying the
    // target, which no ideal generator touches.
    std::optional<Vec> excluded_ray;
};

enum class Bool3 { False, True, Unknown };

inline Bool3 bool3_of(bool b) { return b ? Bool3::True : Bool3::False; }

struct RadicalVerdict {
    std::vector<RadicalEntry> entries;  // one per queried target, input order
    Bool3 m_primary = Bool3::Unknown;   // all minimal semigroup generators answer Yes

    const RadicalEntry& entry_for(const Vec& target) const;
};

class MonomialModule;

// Decides target-by-target containment in the radical of the ideal generated
// by `ideal_gens` (all must lie in S). Exact No verdicts come only from the
// face criterion on normal rings of dimension <= 2 (and free rings); cap
// exhaustion yields Unknown, never a wrong answer.
RadicalVerdict radical_test(const RingPtr& ring, const std::vector<Vec>& ideal_gens,
                            const std::vector<Vec>& targets, Coord radical_cap = 64);

}  // namespace semigor
