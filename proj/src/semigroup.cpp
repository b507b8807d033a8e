#include "semigor/semigroup.hpp"

#include <algorithm>
#include <sstream>

namespace semigor {

namespace {

Coord cross(const Vec& a, const Vec& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

// Angular extremes of a family of 2d vectors lying in an open half-plane.
Cone2D cone_of(const std::vector<Vec>& gens) {
    Vec low = gens.front(), high = gens.front();
    for (const Vec& g : gens) {
        if (cross(g, low) > 0) low = g;
        if (cross(high, g) > 0) high = g;
    }
    if (cross(low, high) == 0) {
        // All generators parallel; a full-rank ring never gets here.
        raise(ErrorKind::InvalidArgument, "generators span a degenerate cone");
    }
    return Cone2D::from_rays(low, high);
}

// Frobenius number of a d=1 semigroup given by positive generators with
// gcd 1 (-1 when 1 is a generator). Bitmap DP up to a Schur-style bound.
Coord frobenius_of(const std::vector<Coord>& gens) {
    Coord lo = gens.front(), hi = gens.front();
    for (Coord g : gens) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    if (lo == 1) return -1;
    Coord bound = checked_add(checked_mul(lo, hi), 1);
    if (bound > 4'000'000)
        raise(ErrorKind::DegreeCapExceeded, "Frobenius bound " + std::to_string(bound) + " too large");
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (Coord n = 1; n <= bound; ++n)
        for (Coord g : gens)
            if (n >= g && member[static_cast<std::size_t>(n - g)]) {
                member[static_cast<std::size_t>(n)] = 1;
                break;
            }
    for (Coord n = bound; n >= 0; --n)
        if (!member[static_cast<std::size_t>(n)]) return n;
    return -1;
}

}  // namespace

RingPtr AffineSemigroupRing::create(int dim, std::vector<Vec> generators, Grading grading,
                                    Limits limits) {
    if (dim < 1) raise(ErrorKind::InvalidArgument, "dimension must be positive");
    if (generators.empty()) raise(ErrorKind::EmptyGenerators, "a semigroup ring needs generators");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const Vec& g : generators)
        if (static_cast<int>(g.size()) != dim)
            raise(ErrorKind::DimensionMismatch, "generator " + vec_to_string(g));
    if (static_cast<int>(grading.weights.size()) != dim)
        raise(ErrorKind::DimensionMismatch, "grading weight vector");
    if (grading.divisor < 1) raise(ErrorKind::InvalidArgument, "grading divisor must be positive");

    auto basis = LatticeBasis::from_generators(dim, generators);
    if (!basis)
        raise(ErrorKind::GroupNotFull,
              "generators do not span a rank-" + std::to_string(dim) +
                  " group; re-embed the semigroup in a lattice of its own rank");
    if (basis->index() != 1)
        raise(ErrorKind::GroupNotFull,
              "generators span a sublattice of index " + std::to_string(basis->index()) +
                  "; re-embed via a basis of that sublattice");

    auto ring = std::shared_ptr<AffineSemigroupRing>(new AffineSemigroupRing());
    ring->dim_ = dim;
    ring->gens_ambient_ = std::move(generators);
    ring->grading_ = std::move(grading);
    ring->limits_ = limits;
    ring->lattice_ = LatticeBasis::identity(dim);
    ring->finish_construction(std::nullopt);
    return ring;
}

RingPtr AffineSemigroupRing::create_on_lattice(int dim, std::vector<Vec> generators, Grading grading,
                                               LatticeBasis lattice, Limits limits,
                                               std::optional<std::vector<Vec>> minimal_gens) {
    if (generators.empty()) raise(ErrorKind::EmptyGenerators, "a semigroup ring needs generators");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    auto ring = std::shared_ptr<AffineSemigroupRing>(new AffineSemigroupRing());
    ring->dim_ = dim;
    ring->gens_ambient_ = std::move(generators);
    ring->grading_ = std::move(grading);
    ring->limits_ = limits;
    ring->lattice_ = std::move(lattice);
    ring->finish_construction(std::move(minimal_gens));
    return ring;
}

void AffineSemigroupRing::finish_construction(std::optional<std::vector<Vec>> minimal_gens) {
    gens_internal_.clear();
    for (const Vec& g : gens_ambient_) {
        auto u = lattice_.to_internal(g);
        if (!u)
            raise(ErrorKind::InvalidArgument,
                  "generator " + vec_to_string(g) + " is outside the ring lattice");
        gens_internal_.push_back(*u);
    }

    grading_internal_.divisor = 1;
    grading_internal_.weights.assign(dim_, 0);
    for (int j = 0; j < dim_; ++j) {
        Coord w = grading_.raw(lattice_.columns()[j]);
        if (w % grading_.divisor != 0)
            raise(ErrorKind::InvalidArgument, "grading is not integral on the ring lattice");
        grading_internal_.weights[j] = w / grading_.divisor;
    }

    for (std::size_t i = 0; i < gens_internal_.size(); ++i)
        if (grading_internal_.degree(gens_internal_[i]) <= 0)
            raise(ErrorKind::NonPositiveDegree,
                  "generator " + vec_to_string(gens_ambient_[i]) + " has non-positive degree");

    bool nonneg = true;
    std::vector<char> unit_seen(dim_, 0);
    for (const Vec& u : gens_internal_) {
        int support = -1;
        bool is_unit = true;
        for (int i = 0; i < dim_; ++i) {
            if (u[i] < 0) nonneg = false;
            if (u[i] != 0) {
                if (support >= 0 || u[i] != 1) is_unit = false;
                support = i;
            }
        }
        if (is_unit && support >= 0) unit_seen[support] = 1;
    }
    free_ = nonneg && std::all_of(unit_seen.begin(), unit_seen.end(), [](char c) { return c != 0; });

    if (dim_ == 2) {
        cone_ambient_ = cone_of(gens_ambient_);
        cone_internal_ = lattice_.is_identity() ? cone_ambient_ : cone_of(gens_internal_);
    }

    if (limits_.degree_cap < 1 || limits_.degree_cap > 2'000'000)
        raise(ErrorKind::InvalidArgument, "degree cap out of range");
    slices_.clear();
    slices_.resize(static_cast<std::size_t>(limits_.degree_cap) + 1);
    slices_[0] = std::make_unique<std::vector<Vec>>(std::vector<Vec>{Vec(dim_, 0)});
    slices_filled_.store(1, std::memory_order_release);

    if (minimal_gens) {
        std::call_once(minimal_once_, [&] { minimal_gens_ = std::move(*minimal_gens); });
    }
}

void AffineSemigroupRing::ensure_slices(Coord n) const {
    if (slices_filled_.load(std::memory_order_acquire) > n) return;
    std::lock_guard<std::mutex> lock(slice_fill_mutex_);
    for (Coord k = slices_filled_.load(std::memory_order_relaxed); k <= n; ++k) {
        // Each shifted list slices_[k - dg] + g is already sorted, so the
        // slice is a k-way merge rather than a fresh sort.
        std::vector<Vec> out;
        for (const Vec& g : gens_internal_) {
            Coord dg = grading_internal_.degree(g);
            if (dg > k) continue;
            const std::vector<Vec>& prev = *slices_[static_cast<std::size_t>(k - dg)];
            std::vector<Vec> shifted;
            shifted.reserve(prev.size());
            for (const Vec& e : prev) shifted.push_back(vec_add(e, g));
            if (out.empty()) {
                out = std::move(shifted);
            } else {
                std::vector<Vec> merged;
                merged.reserve(out.size() + shifted.size());
                std::merge(out.begin(), out.end(), shifted.begin(), shifted.end(),
                           std::back_inserter(merged));
                out = std::move(merged);
            }
        }
        out.erase(std::unique(out.begin(), out.end()), out.end());
        slices_[static_cast<std::size_t>(k)] = std::make_unique<std::vector<Vec>>(std::move(out));
        slices_filled_.store(k + 1, std::memory_order_release);
    }
}

const std::vector<Vec>& AffineSemigroupRing::slice_internal(Coord n) const {
    if (n < 0) raise(ErrorKind::InvalidArgument, "negative degree slice");
    if (n > limits_.degree_cap)
        raise(ErrorKind::DegreeCapExceeded,
              "degree " + std::to_string(n) + " exceeds cap " + std::to_string(limits_.degree_cap));
    ensure_slices(n);
    return *slices_[static_cast<std::size_t>(n)];
}

bool AffineSemigroupRing::membership_internal(const Vec& u) const {
    Coord deg = grading_internal_.degree(u);
    if (deg < 0) return false;
    if (deg == 0) return is_zero(u);
    if (free_) return std::all_of(u.begin(), u.end(), [](Coord c) { return c >= 0; });
    if (cone_internal_ && !cone_internal_->contains(u)) return false;
    if (deg > limits_.degree_cap)
        raise(ErrorKind::DegreeCapExceeded,
              "membership query at degree " + std::to_string(deg) + " exceeds cap " +
                  std::to_string(limits_.degree_cap));
    const std::vector<Vec>& slice = slice_internal(deg);
    return std::binary_search(slice.begin(), slice.end(), u);
}

bool AffineSemigroupRing::membership(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        raise(ErrorKind::DimensionMismatch, "membership query " + vec_to_string(v));
    auto u = to_internal(v);
    if (!u) return false;
    return membership_internal(*u);
}

std::vector<Vec> AffineSemigroupRing::elements_of_degree(Coord n) const {
    if (n < 0) return {};
    std::vector<Vec> out;
    for (const Vec& u : slice_internal(n)) out.push_back(to_ambient(u));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t AffineSemigroupRing::count_of_degree(Coord n) const {
    if (n < 0) return 0;
    return slice_internal(n).size();
}

const std::vector<Vec>& AffineSemigroupRing::minimal_generators() const {
    std::call_once(minimal_once_, [&] {
        std::vector<Vec> result;
        for (std::size_t i = 0; i < gens_internal_.size(); ++i) {
            const Vec& g = gens_internal_[i];
            Coord deg = grading_internal_.degree(g);
            bool reducible = false;
            // A decomposition g = e + f with both parts nonzero has a part of
            // degree <= deg/2; scan those slices only.
            for (Coord de = 1; de <= deg / 2 && !reducible; ++de) {
                for (const Vec& e : slice_internal(de)) {
                    if (membership_internal(vec_sub(g, e))) {
                        reducible = true;
                        break;
                    }
                }
            }
            if (!reducible) result.push_back(gens_ambient_[i]);
        }
        sort_deg_lex(grading_, result);
        minimal_gens_ = std::move(result);
    });
    return minimal_gens_;
}

Coord AffineSemigroupRing::indeg() const {
    return grading_.degree(minimal_generators().front());
}

Coord AffineSemigroupRing::max_generator_degree() const {
    Coord m = 0;
    for (const Vec& g : minimal_generators()) m = std::max(m, grading_.degree(g));
    return m;
}

bool AffineSemigroupRing::is_normal() const {
    std::call_once(normal_once_, [&] {
        if (free_) {
            normal_ = true;
            return;
        }
        if (dim_ == 1) {
            // S = N exactly when 1 generates.
            normal_ = membership_internal(Vec{1});
            return;
        }
        if (dim_ == 2) {
            std::vector<Vec> basis = hilbert_basis_2d(*cone_internal_);
            std::vector<Vec> mins;
            for (const Vec& g : minimal_generators()) mins.push_back(*to_internal(g));
            std::sort(mins.begin(), mins.end());
            std::sort(basis.begin(), basis.end());
            normal_ = (mins == basis);
            return;
        }
        raise(ErrorKind::UnsupportedDimension,
              "normality is only decided for dimension <= 2 and free rings");
    });
    return normal_;
}

const Cone2D& AffineSemigroupRing::cone_ambient() const {
    if (!cone_ambient_) raise(ErrorKind::UnsupportedDimension, "cone of a non-2d ring");
    return *cone_ambient_;
}

const Cone2D& AffineSemigroupRing::cone_internal() const {
    if (!cone_internal_) raise(ErrorKind::UnsupportedDimension, "cone of a non-2d ring");
    return *cone_internal_;
}

Coord AffineSemigroupRing::window_scale() const {
    if (dim_ == 1) {
        std::vector<Coord> gens;
        for (const Vec& g : gens_internal_) gens.push_back(g[0]);
        Coord f = frobenius_of(gens);
        Coord w = grading_internal_.weights[0];
        Coord maxg = *std::max_element(gens.begin(), gens.end());
        return checked_mul(w, checked_add(std::max<Coord>(f, 0), checked_add(maxg, 1)));
    }
    if (dim_ == 2) {
        Coord m = 1;
        for (const Vec& u : hilbert_basis_2d(*cone_internal_))
            m = std::max(m, grading_internal_.degree(u));
        return m;
    }
    Coord m = 1;
    for (const Vec& g : minimal_generators()) m = std::max(m, grading_.degree(g));
    return checked_mul(m, static_cast<Coord>(dim_));
}

bool AffineSemigroupRing::same_ring(const AffineSemigroupRing& other) const {
    return dim_ == other.dim_ && gens_ambient_ == other.gens_ambient_ &&
           grading_.weights == other.grading_.weights && grading_.divisor == other.grading_.divisor;
}

std::string AffineSemigroupRing::describe() const {
    std::ostringstream os;
    os << "ring(d=" << dim_ << ", gens";
    for (const Vec& g : gens_ambient_) os << ' ' << vec_to_string(g);
    os << ", grading " << vec_to_string(grading_.weights);
    if (grading_.divisor != 1) os << "/" << grading_.divisor;
    os << ')';
    return os.str();
}

const RadicalEntry& RadicalVerdict::entry_for(const Vec& target) const {
    for (const RadicalEntry& e : entries)
        if (e.target == target) return e;
    raise(ErrorKind::InvalidArgument, "no radical entry for " + vec_to_string(target));
}

namespace {

bool in_ideal_module(const AffineSemigroupRing& ring, const std::vector<Vec>& gens_internal,
                     const Vec& u) {
    for (const Vec& g : gens_internal)
        if (ring.membership_internal(vec_sub(u, g))) return true;
    return false;
}

RadicalEntry decide_target(const RingPtr& ring, const std::vector<Vec>& ideal_internal,
                           const Vec& target_ambient, const Vec& target_internal, Coord cap) {
    RadicalEntry entry{target_ambient, RadicalAnswer::Unknown, 0, std::nullopt};
    if (ideal_internal.empty()) {
        // Radical of the zero ideal in a domain.
        entry.answer = RadicalAnswer::No;
        return entry;
    }

    bool exact_no_possible = false;
    if (ring->is_free()) {
        // Support criterion: k*u clears g componentwise for large k exactly
        // when supp(g) is contained in supp(u).
        exact_no_possible = true;
        bool can = false;
        for (const Vec& g : ideal_internal) {
            bool ok = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0 && target_internal[i] <= 0) ok = false;
            if (ok) {
                can = true;
                break;
            }
        }
        if (!can) {
            entry.answer = RadicalAnswer::No;
            return entry;
        }
    } else if (ring->dim() == 2 && ring->is_normal()) {
        exact_no_possible = true;
        ConePosition pos = ring->cone_internal().position(target_internal);
        if (pos.region == ConeRegion::Boundary) {
            // Face criterion: a boundary target needs an ideal generator on
            // the same extreme ray.
            bool on_ray = false;
            for (const Vec& g : ideal_internal) {
                Coord val = pos.ray == BoundaryRay::Low ? ring->cone_internal().normal_low(g)
                                                        : ring->cone_internal().normal_high(g);
                if (val == 0) {
                    on_ray = true;
                    break;
                }
            }
            if (!on_ray) {
                entry.answer = RadicalAnswer::No;
                entry.excluded_ray = pos.ray == BoundaryRay::Low
                                         ? ring->cone_ambient().ray_low()
                                         : ring->cone_ambient().ray_high();
                return entry;
            }
        }
    } else if (ring->dim() == 1) {
        // A nonzero ideal in a 1-dimensional monomial domain is always
        // m-primary; the bounded search below certifies the power.
        exact_no_possible = false;
    }

    for (Coord k = 1; k <= cap; ++k) {
        if (in_ideal_module(*ring, ideal_internal, vec_scale(k, target_internal))) {
            entry.answer = RadicalAnswer::Yes;
            entry.power = k;
            return entry;
        }
    }
    if (exact_no_possible)
        raise(ErrorKind::RadicalCapExceeded,
              "radical power search exceeded cap " + std::to_string(cap) + " for " +
                  vec_to_string(target_ambient) + " although containment is certain");
    entry.answer = RadicalAnswer::Unknown;
    entry.power = cap;
    return entry;
}

}  // namespace

RadicalVerdict radical_test(const RingPtr& ring, const std::vector<Vec>& ideal_gens,
                            const std::vector<Vec>& targets, Coord radical_cap) {
    std::vector<Vec> ideal_internal;
    for (const Vec& g : ideal_gens) {
        auto u = ring->to_internal(g);
        if (!u || !ring->membership_internal(*u))
            raise(ErrorKind::InvalidArgument,
                  "radical test requires an ideal: " + vec_to_string(g) + " is not in the ring");
        ideal_internal.push_back(*u);
    }

    RadicalVerdict verdict;
    for (const Vec& t : targets) {
        auto u = ring->to_internal(t);
        if (!u || is_zero(*u) || !ring->membership_internal(*u))
            raise(ErrorKind::InvalidArgument,
                  "radical target " + vec_to_string(t) + " must be a nonzero ring element");
        verdict.entries.push_back(decide_target(ring, ideal_internal, t, *u, radical_cap));
    }

    bool all_yes = true, any_no = false;
    for (const Vec& g : ring->minimal_generators()) {
        auto u = ring->to_internal(g);
        RadicalEntry e = decide_target(ring, ideal_internal, g, *u, radical_cap);
        if (e.answer != RadicalAnswer::Yes) all_yes = false;
        if (e.answer == RadicalAnswer::No) any_no = true;
    }
    verdict.m_primary = all_yes ? Bool3::True : (any_no ? Bool3::False : Bool3::Unknown);
    return verdict;
}

}  // namespace semigor
