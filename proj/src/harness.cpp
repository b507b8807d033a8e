#include "semigor/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "semigor/parallel.hpp"

namespace semigor {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

Coord SplitMix64::range(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool SplitMix64::chance(int numerator, int denominator) {
    return below(static_cast<std::uint64_t>(denominator)) < static_cast<std::uint64_t>(numerator);
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::T5: return "T5";
        case TheoremId::T6: return "T6";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5,
                         TheoremId::T6})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

RingPtr RingSpecData::build(const Limits& limits) const {
    if (numerical) return to_ring(numerical_profile(*numerical), limits);
    return new_ring(dim, generators, Grading{grading_weights, 1}, limits);
}

RingSpecData RingSpecData::of_ring(const AffineSemigroupRing& ring, std::string label) {
    if (ring.grading().divisor != 1)
        raise(ErrorKind::InvalidArgument, "only divisor-1 rings serialize as specs");
    RingSpecData spec;
    spec.label = std::move(label);
    spec.dim = ring.dim();
    spec.generators = ring.generators();
    spec.grading_weights = ring.grading().weights;
    return spec;
}

// ---------------------------------------------------------------------------
// Theorem evaluation

namespace {

Bool3 merge_hypotheses(const std::vector<std::pair<std::string, Bool3>>& hyps) {
    bool unknown = false;
    for (const auto& [name, value] : hyps) {
        if (value == Bool3::False) return Bool3::False;
        if (value == Bool3::Unknown) unknown = true;
    }
    return unknown ? Bool3::Unknown : Bool3::True;
}

void finish(TheoremInstanceResult& result) {
    result.hypotheses_met = merge_hypotheses(result.hypotheses);
    result.counterexample =
        result.hypotheses_met == Bool3::True && result.conclusion == Bool3::False;
}

bool normal_dim2(const RingPtr& ring) { return ring->dim() == 2 && ring->is_normal(); }

TheoremInstanceResult eval_t1(const RingPtr& ring) {
    TheoremInstanceResult r;
    r.hypotheses.emplace_back("normal_dim_2", bool3_of(normal_dim2(ring)));
    ClassificationReport cls = classify(ring, canonical_module(ring));
    r.hypotheses.emplace_back("nearly_gorenstein", bool3_of(cls.nearly_gorenstein));
    r.hypotheses.emplace_back("indeg_part_m_primary", cls.semi_standard);
    r.conclusion = bool3_of(cls.pseudo_gorenstein == cls.gorenstein);
    finish(r);
    return r;
}

TheoremInstanceResult eval_t2(const RingPtr& ring) {
    TheoremInstanceResult r;
    r.hypotheses.emplace_back("normal_dim_2", bool3_of(normal_dim2(ring)));
    ClassificationReport cls = classify(ring, canonical_module(ring));
    r.hypotheses.emplace_back("nearly_gorenstein", bool3_of(cls.nearly_gorenstein));
    r.hypotheses.emplace_back("indeg_part_m_primary", cls.semi_standard);
    r.hypotheses.emplace_back("type_two", bool3_of(cls.cm_type == 2));
    r.conclusion = bool3_of(cls.level);
    finish(r);
    return r;
}

TheoremInstanceResult eval_t3(const RingPtr& ring) {
    TheoremInstanceResult r;
    r.hypotheses.emplace_back("normal_dim_2", bool3_of(normal_dim2(ring)));
    ClassificationReport cls = classify(ring, canonical_module(ring));
    r.hypotheses.emplace_back("natural_condition", cls.natural_condition);
    r.conclusion = bool3_of(!cls.pseudo_gorenstein || cls.gorenstein);
    finish(r);
    return r;
}

TheoremInstanceResult eval_t4(const RingPtr& ring, Coord k) {
    VeroneseCheck check = okokok_check(ring, k);
    TheoremInstanceResult r;
    r.hypotheses = check.hypotheses;
    r.conclusion = check.conclusion;
    finish(r);
    return r;
}

TheoremInstanceResult eval_t5(const RingPtr& ring, const TheoremWitnesses& wit) {
    TheoremInstanceResult r;
    r.hypotheses.emplace_back("normal_dim_2", bool3_of(normal_dim2(ring)));

    MonomialModule ideal = minimize_generators(ring, wit.ideal_gens);
    bool fs_ok = ideal.is_ideal() && ideal.contains(wit.f1) && ideal.contains(wit.f2) &&
                 ring->membership(wit.f1) && ring->membership(wit.f2);
    r.hypotheses.emplace_back("f1_f2_in_ideal", bool3_of(fs_ok));
    r.hypotheses.emplace_back("f2_outside_Rf1",
                              bool3_of(fs_ok && !ring->membership(vec_sub(wit.f2, wit.f1))));

    Coord indeg = ring->indeg();
    bool thetas_in_ring = ring->membership(wit.theta1) && ring->membership(wit.theta2);
    bool theta_deg = thetas_in_ring && ring->degree(wit.theta1) == indeg &&
                     ring->degree(wit.theta2) == indeg;
    r.hypotheses.emplace_back("theta_degree_indeg", bool3_of(theta_deg));

    // System-of-parameters certificate: two monomials in a 2-dimensional
    // Cohen-Macaulay ring form a regular sequence iff they generate an
    // m-primary ideal.
    Bool3 regular = Bool3::False;
    if (theta_deg)
        regular = radical_test(ring, {wit.theta1, wit.theta2}, {}, ring->limits().radical_cap)
                      .m_primary;
    r.hypotheses.emplace_back("theta_regular_sequence", regular);

    if (fs_ok) {
        bool escape1 = !ring->membership(vec_add(wit.theta1, vec_sub(wit.f2, wit.f1)));
        bool escape2 = !ring->membership(vec_add(wit.theta2, vec_sub(wit.f2, wit.f1)));
        r.conclusion = bool3_of(escape1 || escape2);
        r.note = escape1 ? "i=1" : (escape2 ? "i=2" : "");
    }
    finish(r);
    return r;
}

TheoremInstanceResult eval_t6(const RingPtr& ring, Coord k) {
    TheoremInstanceResult r;
    std::vector<Vec> degree_one = ring->elements_of_degree(1);
    r.hypotheses.emplace_back("degree_one_element", bool3_of(!degree_one.empty()));

    CanonicalModule omega = canonical_module(ring);
    MonomialModule trace = trace_module(omega.module);
    std::vector<Vec> trace_one = trace.elements_of_degree(1);
    r.hypotheses.emplace_back("trace_has_degree_one_part", bool3_of(!trace_one.empty()));
    finish(r);
    if (r.hypotheses_met != Bool3::True) return r;

    MonomialModule ideal = minimize_generators(ring, trace_one);
    MonomialModule degree_one_ideal = minimize_generators(ring, degree_one);
    MonomialModule power = ideal;  // n^(k-1) * I
    for (Coord i = 1; i < k; ++i) power = multiply_modules(power, degree_one_ideal);

    RingPtr veronese = veronese_ring(ring, k);
    MonomialModule power_v = veronese_module(power, k, veronese);
    MonomialModule omega_v = veronese_module(omega.module, k, veronese);
    MonomialModule trace_v = trace_module(omega_v);

    bool included = true;
    for (const Vec& g : power_v.generators())
        if (!trace_v.contains(g)) {
            included = false;
            r.note = "missing " + vec_to_string(g);
            break;
        }
    r.conclusion = bool3_of(included);
    finish(r);
    return r;
}

}  // namespace

TheoremInstanceResult check_theorem(const TheoremInstance& instance, const RingPtr& ring) {
    try {
        switch (instance.id) {
            case TheoremId::T1: return eval_t1(ring);
            case TheoremId::T2: return eval_t2(ring);
            case TheoremId::T3: return eval_t3(ring);
            case TheoremId::T4: return eval_t4(ring, instance.k > 0 ? instance.k : 2);
            case TheoremId::T5:
                if (!instance.witnesses)
                    raise(ErrorKind::InvalidArgument, "T5 instance without witnesses");
                return eval_t5(ring, *instance.witnesses);
            case TheoremId::T6: return eval_t6(ring, instance.k > 0 ? instance.k : 2);
        }
        raise(ErrorKind::InvalidArgument, "unknown theorem");
    } catch (const Error& e) {
        TheoremInstanceResult r;
        r.errored = true;
        r.hypotheses_met = Bool3::Unknown;
        r.conclusion = Bool3::Unknown;
        r.note = e.what();
        return r;
    }
}

TheoremInstanceResult check_theorem(const TheoremInstance& instance, const Limits& limits) {
    RingPtr ring;
    try {
        ring = instance.ring.build(limits);
    } catch (const Error& e) {
        TheoremInstanceResult r;
        r.errored = true;
        r.hypotheses_met = Bool3::Unknown;
        r.note = e.what();
        return r;
    }
    return check_theorem(instance, ring);
}

// ---------------------------------------------------------------------------
// Families

NumericalSemigroup random_numerical(SplitMix64& rng, Coord max_multiplicity, Coord max_frobenius) {
    Coord mult = rng.range(1, std::max<Coord>(1, max_multiplicity));
    if (mult == 1) return numerical_profile({1});
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Coord> gens{mult};
        for (Coord n = mult + 1; n < 3 * mult; ++n)
            if (rng.chance(1, 3)) gens.push_back(n);
        Coord g = 0;
        for (Coord x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        NumericalSemigroup ns = numerical_profile(gens);
        if (ns.frobenius <= max_frobenius) return ns;
    }
    return numerical_profile({mult, mult + 1});
}

std::vector<NumericalSemigroup> exhaustive_numerical(Coord max_multiplicity, Coord max_frobenius) {
    const Coord limit = max_frobenius + std::max<Coord>(max_multiplicity, 2) + 2;

    struct Node {
        std::vector<char> member;  // membership bitmap on [0, limit]
        Coord frobenius;
    };

    auto minimal_gens_of = [&](const std::vector<char>& member) {
        std::vector<Coord> gens;
        for (Coord n = 1; n <= limit; ++n) {
            if (!member[static_cast<std::size_t>(n)]) continue;
            bool reducible = false;
            for (Coord a = 1; a < n && !reducible; ++a)
                if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(n - a)])
                    reducible = true;
            if (!reducible) gens.push_back(n);
        }
        return gens;
    };

    std::vector<NumericalSemigroup> out;
    std::vector<Node> stack;
    stack.push_back({std::vector<char>(static_cast<std::size_t>(limit) + 1, 1), -1});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        Coord mult = limit + 1;
        for (Coord n = 1; n <= limit; ++n)
            if (node.member[static_cast<std::size_t>(n)]) {
                mult = n;
                break;
            }
        if (mult > max_multiplicity) continue;  // children only grow the multiplicity

        std::vector<Coord> gens = minimal_gens_of(node.member);
        out.push_back(numerical_profile(gens));

        // Children remove one minimal generator beyond the Frobenius number;
        // pushed in descending order so DFS emits ascending removals first.
        std::vector<Coord> removable;
        for (Coord g : gens)
            if (g > node.frobenius && g <= max_frobenius) removable.push_back(g);
        for (auto it = removable.rbegin(); it != removable.rend(); ++it) {
            Node child = node;
            child.member[static_cast<std::size_t>(*it)] = 0;
            child.frobenius = *it;
            stack.push_back(std::move(child));
        }
    }
    return out;
}

RingPtr random_normal_2d(SplitMix64& rng, Coord max_slope_coord, Coord grading_range,
                         const Limits& limits) {
    Coord p = rng.range(1, max_slope_coord);
    Coord q = rng.range(1, max_slope_coord);
    Vec ray = primitive(Vec{p, q});
    Cone2D cone = Cone2D::from_rays({1, 0}, ray);
    std::vector<Vec> basis = hilbert_basis_2d(cone);

    for (int attempt = 0; attempt < 200; ++attempt) {
        Grading grading{{rng.range(1, grading_range), rng.range(-grading_range, grading_range)}, 1};
        bool positive = std::all_of(basis.begin(), basis.end(),
                                    [&](const Vec& g) { return grading.raw(g) > 0; });
        if (positive) return new_ring(2, basis, grading, limits);
    }
    raise(ErrorKind::RetryExhausted, "no positive grading found for cone with ray " +
                                         vec_to_string(ray));
}

RingPtr segment_ring(Coord width, Coord shear, const Limits& limits) {
    if (width < 1) raise(ErrorKind::InvalidArgument, "segment width must be positive");
    std::vector<Vec> gens;
    for (Coord j = 0; j <= width; ++j)
        gens.push_back(Vec{j, checked_add(1, checked_mul(shear, j))});
    Grading grading{{checked_sub(0, shear), 1}, 1};
    return new_ring(2, gens, grading, limits);
}

// ---------------------------------------------------------------------------
// Campaign

namespace {

TheoremWitnesses sample_t5_witnesses(const RingPtr& ring, SplitMix64& rng) {
    TheoremWitnesses wit;
    Coord indeg = ring->indeg();
    std::vector<Vec> slice = ring->elements_of_degree(indeg);

    auto pick = [&](const std::vector<Vec>& pool) { return pool[rng.below(pool.size())]; };

    // Bias half the draws toward an extreme-ray pair, the configuration that
    // can actually be a system of parameters.
    bool ray_pair = false;
    if (ring->dim() == 2 && rng.chance(1, 2)) {
        std::vector<Vec> low, high;
        for (const Vec& v : slice) {
            ConePosition pos = ring->cone_ambient().position(v);
            if (pos.region == ConeRegion::Boundary && pos.ray == BoundaryRay::Low) low.push_back(v);
            if (pos.region == ConeRegion::Boundary && pos.ray == BoundaryRay::High)
                high.push_back(v);
        }
        if (!low.empty() && !high.empty()) {
            wit.theta1 = pick(low);
            wit.theta2 = pick(high);
            ray_pair = true;
        }
    }
    if (!ray_pair) {
        wit.theta1 = pick(slice);
        wit.theta2 = pick(slice);
    }

    if (rng.chance(1, 2)) {
        wit.ideal_gens = ring->minimal_generators();
    } else {
        std::vector<Vec> pool = slice;
        for (const Vec& v : ring->elements_of_degree(indeg + 1)) pool.push_back(v);
        wit.ideal_gens = {pick(pool), pick(pool)};
    }

    wit.f1 = pick(wit.ideal_gens);
    if (rng.chance(1, 2) && wit.ideal_gens.size() > 1) {
        wit.f2 = pick(wit.ideal_gens);
    } else {
        wit.f2 = vec_add(wit.f1, pick(slice));
    }
    return wit;
}

}  // namespace

GeneratedInstance generate_instance(const CampaignConfig& config, int index) {
    if (config.family != "mixed2d" && config.family != "cone2d" && config.family != "segment" &&
        config.family != "numerical")
        raise(ErrorKind::InvalidArgument, "unknown instance family \"" + config.family + "\"");

    SplitMix64 rng(config.seed, static_cast<std::uint64_t>(index));
    GeneratedInstance gen;

    bool segment = false;
    if (config.family == "segment") segment = true;
    else if (config.family == "mixed2d") segment = (index % 2 == 1);

    if (config.family == "numerical") {
        NumericalSemigroup ns = random_numerical(rng, config.max_multiplicity, config.max_frobenius);
        gen.ring = to_ring(ns, config.limits);
        gen.spec = RingSpecData::of_ring(*gen.ring, "numerical-" + std::to_string(index));
        gen.spec.numerical = ns.generators;
    } else if (segment) {
        Coord width = rng.range(1, config.segment_max);
        Coord shear = rng.range(-2, 2);
        gen.ring = segment_ring(width, shear, config.limits);
        gen.spec = RingSpecData::of_ring(*gen.ring, "segment-" + std::to_string(index));
    } else if (index == 0 && (config.family == "mixed2d" || config.family == "cone2d")) {
        // Pinned instance: the worked 2-dimensional example with rays (1,0)
        // and (3,5) and grading by the first coordinate.
        gen.ring = new_ring(2, {{1, 0}, {1, 1}, {2, 3}, {3, 5}}, Grading{{1, 0}, 1}, config.limits);
        gen.spec = RingSpecData::of_ring(*gen.ring, "pinned-x-xy-x2y3-x3y5");
    } else {
        gen.ring = random_normal_2d(rng, config.slope_bound, config.grading_range, config.limits);
        gen.spec = RingSpecData::of_ring(*gen.ring, "cone-" + std::to_string(index));
    }

    gen.veronese_k = rng.range(2, 3);
    gen.witnesses = sample_t5_witnesses(gen.ring, rng);
    return gen;
}

namespace {

std::uint64_t fnv1a(std::uint64_t hash, const std::string& text) {
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string result_digest_text(int index, TheoremId id, const TheoremInstanceResult& r) {
    std::ostringstream os;
    os << index << '|' << theorem_name(id) << '|' << bool3_name(r.hypotheses_met) << '|'
       << bool3_name(r.conclusion) << '|' << (r.counterexample ? "CX" : "ok") << '|'
       << (r.errored ? "err" : "-");
    for (const auto& [name, value] : r.hypotheses) os << '|' << name << '=' << bool3_name(value);
    os << ';';
    return os.str();
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
    auto start_time = std::chrono::steady_clock::now();

    struct Outcome {
        TheoremId id;
        TheoremInstanceResult result;
        std::optional<TheoremInstance> payload;  // present only for counterexamples
    };
    std::vector<std::vector<Outcome>> results(static_cast<std::size_t>(std::max(config.count, 0)));

    par::map_flags(
        results.size(),
        [&](std::size_t i) {
            GeneratedInstance gen = generate_instance(config, static_cast<int>(i));
            std::vector<Outcome> per;
            for (TheoremId id : config.theorems) {
                TheoremInstance inst;
                inst.id = id;
                inst.ring = gen.spec;
                inst.k = gen.veronese_k;
                if (id == TheoremId::T5) inst.witnesses = gen.witnesses;
                Outcome outcome{id, check_theorem(inst, gen.ring), std::nullopt};
                if (outcome.result.counterexample) outcome.payload = inst;
                per.push_back(std::move(outcome));
            }
            results[i] = std::move(per);
            return true;
        },
        config.parallel && par::enabled(), /*grain=*/1);

    CampaignReport report;
    report.config = config;
    for (TheoremId id : config.theorems) report.tallies.emplace_back(id, TheoremTally{});

    std::uint64_t hash = 1469598103934665603ULL;
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (const Outcome& outcome : results[i]) {
            const TheoremInstanceResult& res = outcome.result;
            TheoremTally* tally = nullptr;
            for (auto& [tid, t] : report.tallies)
                if (tid == outcome.id) tally = &t;
            tally->instances++;
            if (res.errored) {
                tally->errors++;
                report.total_errors++;
            } else {
                switch (res.hypotheses_met) {
                    case Bool3::True: tally->hypotheses_met++; break;
                    case Bool3::False: tally->vacuous++; break;
                    case Bool3::Unknown: tally->vacuous_unknown++; break;
                }
                if (res.hypotheses_met == Bool3::True) {
                    if (res.counterexample) {
                        tally->counterexamples++;
                        report.total_counterexamples++;
                    } else {
                        tally->conclusion_verified++;
                    }
                }
            }
            if (outcome.payload) {
                report.counterexample_instances.push_back(*outcome.payload);
                report.counterexample_results.push_back(res);
            }
            hash = fnv1a(hash, result_digest_text(static_cast<int>(i), outcome.id, res));
        }
    }
    std::ostringstream digest;
    digest << std::hex << hash;
    report.digest = digest.str();
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

}  // namespace semigor
