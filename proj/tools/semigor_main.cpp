#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semigor/json_io.hpp"
#include "semigor/parallel.hpp"

using namespace semigor;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string vecs_line(const std::vector<Vec>& vs) {
    std::string out;
    for (const Vec& v : vs) {
        if (!out.empty()) out += ' ';
        out += vec_to_string(v);
    }
    return out;
}

struct GlobalOptions {
    bool json = false;
    bool serial = false;
    Limits limits;
};

CanonicalModule canonical_for_spec(const RingSpecData& spec, const RingPtr& ring) {
    if (spec.canonical_generators) return user_canonical(ring, *spec.canonical_generators);
    return canonical_module(ring);
}

void print_classification_text(std::ostream& os, const RingSpecData& spec,
                               const ClassificationReport& report) {
    os << "ring: " << (spec.label.empty() ? "(unlabeled)" : spec.label) << "\n";
    if (spec.numerical) {
        os << "  numerical generators:";
        for (Coord g : *spec.numerical) os << ' ' << g;
        os << "\n";
    } else {
        os << "  generators: " << vecs_line(spec.generators) << "\n";
        os << "  grading: " << vec_to_string(spec.grading_weights) << "\n";
    }
    os << "  gorenstein:        " << (report.gorenstein ? "true" : "false") << "\n";
    os << "  quasi_gorenstein:  " << (report.quasi_gorenstein ? "true" : "false") << "\n";
    os << "  pseudo_gorenstein: " << (report.pseudo_gorenstein ? "true" : "false") << "\n";
    os << "  level:             " << (report.level ? "true" : "false") << "\n";
    os << "  nearly_gorenstein: " << (report.nearly_gorenstein ? "true" : "false") << "\n";
    os << "  natural_condition: " << bool3_name(report.natural_condition) << "\n";
    os << "  semi_standard:     " << bool3_name(report.semi_standard) << "\n";
    os << "  cm_type:           " << report.cm_type << "\n";
    os << "  a_invariant:       " << report.a_invariant << "\n";
    os << "  indeg(m):          " << report.indeg_maximal << "\n";
    os << "  omega generators:  " << vecs_line(report.omega_generators) << "\n";
    os << "  trace generators:  " << vecs_line(report.trace_generators) << "\n";
    os << "  canonical_verified: " << (report.canonical_verified ? "true" : "false") << "\n";
}

int cmd_classify(const GlobalOptions& opts, const std::string& path) {
    RingSpecData spec = parse_ring_spec(read_file(path));
    RingPtr ring = spec.build(opts.limits);
    CanonicalModule canonical = canonical_for_spec(spec, ring);
    ClassificationReport report = classify(ring, canonical);

    Json j = classification_to_json(spec, report);
    if (!spec.label.empty()) j["label"] = spec.label;
    j["is_normal"] = ring->is_normal();
    try {
        j["h_vector"] = h_vector_to_json(h_vector(ring));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotSemiStandard) throw;
        Json hv = Json::object();
        hv["error"] = "NotSemiStandard";
        if (e.witness()) hv["witness"] = Json(*e.witness());
        j["h_vector"] = hv;
    }

    if (opts.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_classification_text(std::cout, spec, report);
        std::cout << "  is_normal:         " << (ring->is_normal() ? "true" : "false") << "\n";
        if (j["h_vector"].contains("error")) {
            std::cout << "  h_vector:          NotSemiStandard";
            if (j["h_vector"].contains("witness"))
                std::cout << " (witness " << j["h_vector"]["witness"].dump() << ")";
            std::cout << "\n";
        } else {
            std::cout << "  h_vector:          " << j["h_vector"]["h"].dump()
                      << "  socle=" << j["h_vector"]["socle_degree"]
                      << "  e=" << j["h_vector"]["multiplicity"] << "\n";
        }
    }
    return 0;
}

int cmd_veronese(const GlobalOptions& opts, const std::string& path, Coord k, bool check_okokok) {
    RingSpecData spec = parse_ring_spec(read_file(path));
    RingPtr ring = spec.build(opts.limits);

    RingPtr veronese = veronese_ring(ring, k);
    CanonicalModule omega = canonical_for_spec(spec, ring);
    CanonicalModule omega_v{veronese_module(omega.module, k, veronese), omega.verified};
    ClassificationReport report = classify(veronese, omega_v);

    Json j = Json::object();
    j["base"] = ring_spec_to_json(spec);
    j["k"] = k;
    j["veronese_generators"] = Json::array();
    for (const Vec& g : veronese->generators()) j["veronese_generators"].push_back(Json(g));
    RingSpecData vspec;
    vspec.label = (spec.label.empty() ? std::string("ring") : spec.label) + "^(" +
                  std::to_string(k) + ")";
    vspec.dim = veronese->dim();
    vspec.generators = veronese->generators();
    vspec.grading_weights = veronese->grading().weights;
    j["classification"] = classification_to_json(vspec, report);

    bool counterexample = false;
    if (check_okokok) {
        VeroneseCheck check = okokok_check(ring, k);
        TheoremInstanceResult as_result;
        as_result.hypotheses = check.hypotheses;
        as_result.conclusion = check.conclusion;
        as_result.hypotheses_met =
            check.hypotheses_met ? Bool3::True : Bool3::False;
        as_result.counterexample = check.counterexample();
        counterexample = check.counterexample();
        j["quasi_gorenstein_check"] = result_to_json(as_result);
    }

    if (opts.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "veronese k=" << k << " of "
                  << (spec.label.empty() ? "(unlabeled)" : spec.label) << "\n";
        std::cout << "  generators: " << vecs_line(veronese->generators()) << "\n";
        print_classification_text(std::cout, vspec, report);
        if (check_okokok) {
            std::cout << "  quasi-Gorenstein construction: hypotheses "
                      << j["quasi_gorenstein_check"]["hypotheses_met"].dump() << ", conclusion "
                      << j["quasi_gorenstein_check"]["conclusion"].dump() << "\n";
        }
    }
    return counterexample ? 1 : 0;
}

int cmd_harness(const GlobalOptions& opts, CampaignConfig config, const std::string& out_path) {
    config.limits = opts.limits;
    config.parallel = !opts.serial;
    CampaignReport report = run_campaign(config);
    Json j = campaign_report_to_json(report);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) raise(ErrorKind::InvalidArgument, "cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
    if (opts.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "campaign: seed=" << config.seed << " count=" << config.count
                  << " family=" << config.family << "\n";
        for (const auto& [id, tally] : report.tallies) {
            std::cout << "  " << theorem_name(id) << ": instances=" << tally.instances
                      << " hypotheses_met=" << tally.hypotheses_met << " vacuous=" << tally.vacuous
                      << " vacuous_unknown=" << tally.vacuous_unknown
                      << " conclusion_verified=" << tally.conclusion_verified
                      << " counterexamples=" << tally.counterexamples
                      << " errors=" << tally.errors << "\n";
        }
        std::cout << "  total_counterexamples=" << report.total_counterexamples
                  << " total_errors=" << report.total_errors << "\n";
        std::cout << "  digest=" << report.digest << "\n";
    }
    std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
    if (report.total_counterexamples > 0) {
        std::cerr << "counterexamples found; payloads are in the report\n";
        return 1;
    }
    return 0;
}

int cmd_check(const GlobalOptions& opts, const std::string& path) {
    TheoremInstance instance = parse_instance(read_file(path));
    TheoremInstanceResult result = check_theorem(instance, opts.limits);
    Json j = Json::object();
    j["instance"] = instance_to_json(instance);
    j["result"] = result_to_json(result);
    if (opts.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << theorem_name(instance.id) << " on "
                  << (instance.ring.label.empty() ? "(unlabeled)" : instance.ring.label) << ": "
                  << "hypotheses " << bool3_name(result.hypotheses_met) << ", conclusion "
                  << bool3_name(result.conclusion)
                  << (result.counterexample ? "  ** counterexample confirmed **" : "") << "\n";
        for (const auto& [name, value] : result.hypotheses)
            std::cout << "  " << name << ": " << bool3_name(value) << "\n";
        if (!result.note.empty()) std::cout << "  note: " << result.note << "\n";
    }
    return result.counterexample ? 1 : 0;
}

// Built-in example ring specs; `examples --run-all` re-derives the pinned
// values and is the quick end-to-end smoke check.
struct BuiltinExample {
    const char* name;
    const char* json_text;
};

const BuiltinExample kBuiltins[] = {
    {"worked-2d", R"({"dim":2,"generators":[[1,0],[1,1],[2,3],[3,5]],"grading":[1,0],"label":"worked-2d"})"},
    {"numerical-3-4-5", R"({"numerical":[3,4,5],"label":"numerical-3-4-5"})"},
    {"numerical-2-3", R"({"numerical":[2,3],"label":"numerical-2-3"})"},
    {"plane-n2", R"({"dim":2,"generators":[[1,0],[0,1]],"grading":[1,1],"label":"plane-n2"})"},
    {"space-n3", R"({"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,1]],"grading":[1,1,1],"label":"space-n3"})"},
    {"segment-0-2", R"({"dim":2,"generators":[[0,1],[1,1],[2,1]],"grading":[0,1],"label":"segment-0-2"})"},
};

int cmd_examples(const GlobalOptions& opts, bool run_all) {
    if (!run_all) {
        for (const BuiltinExample& ex : kBuiltins) {
            if (opts.json) std::cout << ex.json_text << "\n";
            else std::cout << ex.name << ": " << ex.json_text << "\n";
        }
        return 0;
    }

    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    Limits limits = opts.limits;

    {
        RingSpecData spec = parse_ring_spec(kBuiltins[0].json_text);
        RingPtr ring = spec.build(limits);
        CanonicalModule omega = canonical_module(ring);
        ClassificationReport cls = classify(ring, omega);
        check("worked-2d normal", ring->is_normal(), "");
        check("worked-2d omega generators",
              omega.module.generators() == std::vector<Vec>{{1, 1}, {2, 3}},
              vecs_line(omega.module.generators()));
        check("worked-2d trace = maximal ideal",
              cls.trace_generators == std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}, {3, 5}},
              vecs_line(cls.trace_generators));
        check("worked-2d flags",
              cls.nearly_gorenstein && cls.pseudo_gorenstein && !cls.level && cls.cm_type == 2 &&
                  cls.a_invariant == -1 && !cls.gorenstein,
              "");
        check("worked-2d natural condition fails", cls.natural_condition == Bool3::False, "");
        MonomialModule trace = trace_module(omega.module);
        RadicalVerdict rad = radical_test(ring, trace.elements_of_degree(1), {{3, 5}},
                                          limits.radical_cap);
        check("worked-2d radical refuses x3y5",
              rad.entries.front().answer == RadicalAnswer::No, "");
    }
    {
        NumericalSemigroup ns = numerical_profile({3, 4, 5});
        check("numerical-3-4-5 profile",
              ns.frobenius == 2 && ns.gaps == std::vector<Coord>{1, 2} &&
                  ns.pseudo_frobenius == std::vector<Coord>{1, 2} && ns.type == 2 &&
                  !ns.symmetric && ns.almost_symmetric,
              "");
        RingPtr ring = to_ring(ns, limits);
        ClassificationReport cls = classify(ring, canonical_module(ring));
        check("numerical-3-4-5 classification",
              cls.pseudo_gorenstein && cls.nearly_gorenstein && !cls.gorenstein &&
                  cls.cm_type == 2 && cls.a_invariant == 2,
              "");
    }
    {
        NumericalSemigroup ns = numerical_profile({2, 3});
        RingPtr ring = to_ring(ns, limits);
        ClassificationReport cls = classify(ring, canonical_module(ring));
        check("numerical-2-3 gorenstein", cls.gorenstein && ns.symmetric && ns.type == 1, "");
    }
    {
        RingSpecData spec = parse_ring_spec(kBuiltins[3].json_text);
        RingPtr n2 = spec.build(limits);
        VeroneseCheck k2 = okokok_check(n2, 2);
        check("plane-n2 k=2 quasi-Gorenstein Veronese",
              k2.hypotheses_met && k2.conclusion == Bool3::True, "");
        VeroneseCheck k3 = okokok_check(n2, 3);
        ClassificationReport v3 = classify(k3.veronese, *k3.omega_veronese);
        check("plane-n2 k=3 negative control",
              !k3.hypotheses_met && v3.cm_type == 2 && v3.level && !v3.gorenstein, "");
        HVectorReport hv = h_vector(k3.veronese);
        check("plane-n2 3rd Veronese h-vector",
              hv.h == std::vector<Coord>{1, 2} && hv.socle_degree == 1 && hv.multiplicity == 3 &&
                  hv.minimal_multiplicity,
              "");
    }
    {
        RingSpecData spec = parse_ring_spec(kBuiltins[4].json_text);
        RingPtr n3 = spec.build(limits);
        VeroneseCheck k3 = okokok_check(n3, 3);
        check("space-n3 k=3 quasi-Gorenstein Veronese",
              k3.hypotheses_met && k3.conclusion == Bool3::True, "");
    }
    {
        RingSpecData spec = parse_ring_spec(kBuiltins[3].json_text);
        TheoremInstance inst;
        inst.id = TheoremId::T5;
        inst.ring = spec;
        inst.witnesses = TheoremWitnesses{{{1, 0}, {0, 1}}, {1, 0}, {0, 1}, {1, 0}, {0, 1}};
        TheoremInstanceResult res = check_theorem(inst, limits);
        check("plane-n2 regular-pair escape",
              res.hypotheses_met == Bool3::True && res.conclusion == Bool3::True &&
                  res.note == "i=2",
              res.note);
    }
    std::cout << (failures == 0 ? "all pinned examples reproduced\n"
                                : std::to_string(failures) + " pinned example(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded semigroup ring classification via canonical trace ideals"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may trail the subcommand arguments

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "emit a single JSON document");
    app.add_flag("--serial", opts.serial, "disable the OpenMP kernels");
    app.add_option("--degree-cap", opts.limits.degree_cap, "membership degree cap")
        ->capture_default_str();
    app.add_option("--radical-cap", opts.limits.radical_cap, "radical power search cap")
        ->capture_default_str();
    app.add_option("--inverse-window", opts.limits.inverse_slack,
                   "additive slack on inverse-module windows")
        ->capture_default_str();
    app.add_option("--veronese-window", opts.limits.veronese_factor,
                   "multiplier on Veronese discovery windows")
        ->capture_default_str();

    std::string classify_path;
    auto* classify_cmd = app.add_subcommand("classify", "classify a ring spec");
    classify_cmd->add_option("file", classify_path, "ring spec JSON file")->required();

    std::string veronese_path;
    Coord veronese_k = 2;
    bool check_okokok = false;
    auto* veronese_cmd = app.add_subcommand("veronese", "Veronese subalgebra of a ring spec");
    veronese_cmd->add_option("file", veronese_path, "ring spec JSON file")->required();
    veronese_cmd->add_option("-k", veronese_k, "Veronese exponent")->required();
    veronese_cmd->add_flag("--check-okokok", check_okokok,
                           "run the quasi-Gorenstein Veronese construction check");

    CampaignConfig config;
    std::string theorem_list = "T1,T2,T3,T5,T6";
    std::string out_path;
    auto* harness_cmd = app.add_subcommand("harness", "seeded theorem verification campaign");
    harness_cmd->add_option("--seed", config.seed, "campaign seed")->capture_default_str();
    harness_cmd->add_option("--count", config.count, "instance count")->capture_default_str();
    harness_cmd->add_option("--theorems", theorem_list, "comma separated theorem ids")
        ->capture_default_str();
    harness_cmd->add_option("--family", config.family, "mixed2d | cone2d | segment | numerical")
        ->capture_default_str();
    harness_cmd->add_option("--slope-bound", config.slope_bound, "cone ray coordinate bound")
        ->capture_default_str();
    harness_cmd->add_option("--grading-range", config.grading_range, "grading weight range")
        ->capture_default_str();
    harness_cmd->add_option("--max-mult", config.max_multiplicity, "numerical multiplicity bound")
        ->capture_default_str();
    harness_cmd->add_option("--max-frobenius", config.max_frobenius, "numerical Frobenius bound")
        ->capture_default_str();
    harness_cmd->add_option("--segment-max", config.segment_max, "segment width bound")
        ->capture_default_str();
    harness_cmd->add_option("--out", out_path, "write the JSON report to a file");

    std::string instance_path;
    auto* check_cmd = app.add_subcommand("check", "re-verify a theorem instance payload");
    check_cmd->add_option("--instance", instance_path, "instance JSON file")->required();

    bool run_all = false;
    auto* examples_cmd = app.add_subcommand("examples", "built-in worked examples");
    examples_cmd->add_flag("--run-all", run_all, "re-derive every pinned value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opts.serial) par::set_enabled(false);

    try {
        if (*classify_cmd) return cmd_classify(opts, classify_path);
        if (*veronese_cmd) return cmd_veronese(opts, veronese_path, veronese_k, check_okokok);
        if (*harness_cmd) {
            config.theorems.clear();
            std::stringstream ss(theorem_list);
            std::string token;
            while (std::getline(ss, token, ',')) {
                if (token.empty()) continue;
                auto id = theorem_from_name(token);
                if (!id) raise(ErrorKind::InvalidArgument, "unknown theorem id " + token);
                config.theorems.push_back(*id);
            }
            return cmd_harness(opts, config, out_path);
        }
        if (*check_cmd) return cmd_check(opts, instance_path);
        if (*examples_cmd) return cmd_examples(opts, run_all);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_resource_error(e.kind()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
