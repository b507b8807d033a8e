#include "semigor/modules.hpp"

#include <algorithm>
#include <sstream>

#include "semigor/parallel.hpp"

namespace semigor {

namespace {

void validate_on_lattice(const RingPtr& ring, const std::vector<Vec>& gens) {
    for (const Vec& g : gens) {
        if (static_cast<int>(g.size()) != ring->dim())
            raise(ErrorKind::DimensionMismatch, "module generator " + vec_to_string(g));
        if (!ring->to_internal(g))
            raise(ErrorKind::InvalidArgument,
                  "module generator " + vec_to_string(g) + " is outside the ring lattice");
    }
}

bool all_in_ring(const RingPtr& ring, const std::vector<Vec>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Vec& g) { return ring->membership(g); });
}

}  // namespace

MonomialModule MonomialModule::from_minimal(RingPtr ring, std::vector<Vec> minimal_gens) {
    if (minimal_gens.empty()) raise(ErrorKind::EmptyInput, "module needs generators");
    validate_on_lattice(ring, minimal_gens);
    MonomialModule m;
    sort_deg_lex(ring->grading(), minimal_gens);
    minimal_gens.erase(std::unique(minimal_gens.begin(), minimal_gens.end()), minimal_gens.end());
    m.gens_ = std::move(minimal_gens);
    m.is_ideal_ = all_in_ring(ring, m.gens_);
    m.ring_ = std::move(ring);
    return m;
}

Coord MonomialModule::min_degree() const { return ring_->degree(gens_.front()); }

Coord MonomialModule::max_degree() const {
    Coord m = ring_->degree(gens_.front());
    for (const Vec& g : gens_) m = std::max(m, ring_->degree(g));
    return m;
}

std::vector<Coord> MonomialModule::generator_degrees() const {
    std::vector<Coord> out;
    for (const Vec& g : gens_) out.push_back(ring_->degree(g));
    std::sort(out.begin(), out.end());
    return out;
}

bool MonomialModule::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ring_->dim())
        raise(ErrorKind::DimensionMismatch, "module membership " + vec_to_string(v));
    if (!ring_->to_internal(v)) return false;
    for (const Vec& g : gens_)
        if (ring_->membership(vec_sub(v, g))) return true;
    return false;
}

std::vector<Vec> MonomialModule::elements_of_degree(Coord n) const {
    std::vector<Vec> out;
    for (const Vec& g : gens_) {
        Coord dg = ring_->degree(g);
        if (dg > n) continue;
        for (const Vec& s : ring_->elements_of_degree(n - dg)) out.push_back(vec_add(g, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string MonomialModule::describe() const {
    std::ostringstream os;
    os << "module";
    for (const Vec& g : gens_) os << ' ' << vec_to_string(g);
    return os.str();
}

MonomialModule minimize_generators(RingPtr ring, const std::vector<Vec>& raw) {
    if (raw.empty()) raise(ErrorKind::EmptyInput, "minimize_generators: empty input");
    validate_on_lattice(ring, raw);
    std::vector<Vec> sorted = raw;
    sort_deg_lex(ring->grading(), sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Vec> kept;
    for (const Vec& v : sorted) {
        bool dominated = false;
        for (const Vec& u : kept) {
            if (ring->membership(vec_sub(v, u))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(v);
    }
    return MonomialModule::from_minimal(std::move(ring), std::move(kept));
}

MonomialModule multiply_modules(const MonomialModule& a, const MonomialModule& b) {
    if (!a.ring()->same_ring(*b.ring()))
        raise(ErrorKind::InvalidArgument, "module product across different rings");
    std::vector<Vec> sums;
    for (const Vec& x : a.generators())
        for (const Vec& y : b.generators()) sums.push_back(vec_add(x, y));
    return minimize_generators(a.ring(), sums);
}

MonomialModule inverse_module(const MonomialModule& ideal) {
    const RingPtr& ring = ideal.ring();
    const std::vector<Vec>& gens = ideal.generators();
    const Coord mindeg = ideal.min_degree();
    const Coord maxdeg = ideal.max_degree();
    const Coord scale = ring->window_scale();
    const Coord slack = ring->limits().inverse_slack;

    // Window [-maxdeg, B] in module degrees; candidates are enumerated as
    // s - g0 over semigroup slices, which is exhaustive because any inverse
    // element v satisfies v + g0 in S. The bound anchors at -mindeg as well:
    // every inverse degree is >= -mindeg, so for ideals shifted far below
    // degree zero the maxdeg anchor alone would cut the window before the
    // first inverse element.
    const Coord lo = checked_sub(0, maxdeg);
    const Coord anchor = std::max(maxdeg, checked_sub(0, mindeg));
    const Coord bound = checked_add(anchor, checked_add(scale, slack));
    const Vec g0 = gens.front();  // minimum degree generator
    const Coord d0 = ring->degree(g0);
    const Coord sweep_width =
        std::max<Coord>(1, checked_add(checked_sub(maxdeg, mindeg), checked_add(scale, slack)));
    if (bound < lo)
        raise(ErrorKind::WindowUnstable,
              "inverse window is empty; raise the window slack above " + std::to_string(slack));

    // Degree cap check up front so the parallel scan cannot throw mid-flight.
    Coord deepest = checked_add(checked_add(bound, sweep_width), std::max(d0, maxdeg));
    if (deepest > ring->degree_cap())
        raise(ErrorKind::DegreeCapExceeded,
              "inverse window needs degree " + std::to_string(deepest) + " > cap " +
                  std::to_string(ring->degree_cap()));
    ring->count_of_degree(deepest);  // pre-warm the slice memo

    // The scan runs in internal coordinates straight off the memoized
    // slices: no per-degree copies, and the parallel filter only performs
    // pure membership reads on the pre-warmed ring.
    const Vec g0_int = *ring->to_internal(g0);
    std::vector<Vec> gens_int;
    for (const Vec& g : gens) gens_int.push_back(*ring->to_internal(g));

    auto collect_members = [&](Coord deg_lo, Coord deg_hi) {
        std::vector<const Vec*> candidates;
        for (Coord n = checked_add(deg_lo, d0); n <= checked_add(deg_hi, d0); ++n) {
            if (n < 0) continue;
            for (const Vec& s : ring->slice_internal(n)) candidates.push_back(&s);
        }
        std::vector<char> flags = par::map_flags(candidates.size(), [&](std::size_t i) {
            Vec v = vec_sub(*candidates[i], g0_int);
            for (const Vec& g : gens_int)
                if (!ring->membership_internal(vec_add(v, g))) return false;
            return true;
        });
        std::vector<Vec> members;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (flags[i]) members.push_back(ring->to_ambient(vec_sub(*candidates[i], g0_int)));
        return members;
    };

    std::vector<Vec> members = collect_members(lo, bound);
    if (members.empty())
        raise(ErrorKind::WindowUnstable,
              "inverse window [" + std::to_string(lo) + "," + std::to_string(bound) +
                  "] found no inverse elements; raise the window slack");
    MonomialModule result = minimize_generators(ring, members);

    // Stability sweep: a window that still produces fresh minimal generators
    // was too small, and trusting it would corrupt every downstream trace.
    std::vector<Vec> beyond = collect_members(checked_add(bound, 1), checked_add(bound, sweep_width));
    for (const Vec& v : beyond) {
        if (!result.contains(v))
            raise(ErrorKind::WindowUnstable,
                  "inverse window [" + std::to_string(lo) + "," + std::to_string(bound) +
                      "] missed generator " + vec_to_string(v) + "; raise the window slack");
    }
    return result;
}

MonomialModule trace_module(const MonomialModule& ideal) {
    MonomialModule tr = multiply_modules(ideal, inverse_module(ideal));
    if (!tr.is_ideal())
        raise(ErrorKind::InvalidArgument, "trace came out fractional: " + tr.describe());
    return tr;
}

}  // namespace semigor
