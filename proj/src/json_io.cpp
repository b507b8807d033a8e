#include "semigor/json_io.hpp"

#include <algorithm>

namespace semigor {

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
    raise(ErrorKind::ParseError, message);
}

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

void reject_unknown_fields(const Json& j, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return item.key() == k; });
        if (!known) parse_fail("unknown field \"" + item.key() + "\" in " + where);
    }
}

Vec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where + " must be an array of integers");
    Vec v;
    for (const auto& c : j) {
        if (!c.is_number_integer()) parse_fail(where + " must contain integers");
        v.push_back(c.get<Coord>());
    }
    return v;
}

std::vector<Vec> vecs_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where + " must be an array of integer vectors");
    std::vector<Vec> out;
    for (const auto& item : j) out.push_back(vec_from_json(item, where));
    return out;
}

Json vec_to_json(const Vec& v) { return Json(v); }

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json j = Json::array();
    for (const Vec& v : vs) j.push_back(vec_to_json(v));
    return j;
}

Json bool3_to_json(Bool3 b) {
    switch (b) {
        case Bool3::True: return Json(true);
        case Bool3::False: return Json(false);
        case Bool3::Unknown: return Json("unknown");
    }
    return Json("unknown");
}

}  // namespace

RingSpecData ring_spec_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("ring spec must be an object");
    RingSpecData spec;
    if (j.contains("numerical")) {
        reject_unknown_fields(j, {"numerical", "label"}, "numerical ring spec");
        Vec numbers = vec_from_json(j.at("numerical"), "\"numerical\"");
        spec.numerical = std::vector<Coord>(numbers.begin(), numbers.end());
        spec.dim = 1;
        if (j.contains("label")) spec.label = j.at("label").get<std::string>();
        return spec;
    }
    reject_unknown_fields(j, {"dim", "generators", "grading", "label", "canonical_generators"},
                          "ring spec");
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        parse_fail("ring spec needs an integer \"dim\"");
    spec.dim = j.at("dim").get<int>();
    if (!j.contains("generators")) parse_fail("ring spec needs \"generators\"");
    spec.generators = vecs_from_json(j.at("generators"), "\"generators\"");
    if (!j.contains("grading")) parse_fail("ring spec needs \"grading\"");
    spec.grading_weights = vec_from_json(j.at("grading"), "\"grading\"");
    if (j.contains("canonical_generators"))
        spec.canonical_generators =
            vecs_from_json(j.at("canonical_generators"), "\"canonical_generators\"");
    if (j.contains("label")) spec.label = j.at("label").get<std::string>();
    return spec;
}

RingSpecData parse_ring_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte);
        parse_fail("invalid JSON at line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + e.what());
    }
    return ring_spec_from_json(j);
}

Json ring_spec_to_json(const RingSpecData& spec) {
    Json j = Json::object();
    if (!spec.label.empty()) j["label"] = spec.label;
    if (spec.numerical) {
        j["numerical"] = Json(*spec.numerical);
        return j;
    }
    j["dim"] = spec.dim;
    j["generators"] = vecs_to_json(spec.generators);
    j["grading"] = vec_to_json(spec.grading_weights);
    if (spec.canonical_generators)
        j["canonical_generators"] = vecs_to_json(*spec.canonical_generators);
    return j;
}

Json classification_to_json(const RingSpecData& spec, const ClassificationReport& report) {
    Json j = Json::object();
    j["ring"] = ring_spec_to_json(spec);
    j["gorenstein"] = report.gorenstein;
    j["quasi_gorenstein"] = report.quasi_gorenstein;
    j["pseudo_gorenstein"] = report.pseudo_gorenstein;
    j["level"] = report.level;
    j["nearly_gorenstein"] = report.nearly_gorenstein;
    j["natural_condition"] = bool3_to_json(report.natural_condition);
    j["semi_standard"] = bool3_to_json(report.semi_standard);
    j["cm_type"] = report.cm_type;
    j["a_invariant"] = report.a_invariant;
    j["indeg_maximal_ideal"] = report.indeg_maximal;
    j["omega_generators"] = vecs_to_json(report.omega_generators);
    j["omega_generator_degrees"] = Json(report.omega_generator_degrees);
    j["trace_generators"] = vecs_to_json(report.trace_generators);
    j["canonical_verified"] = report.canonical_verified;
    return j;
}

Json h_vector_to_json(const HVectorReport& report) {
    Json j = Json::object();
    j["h"] = Json(report.h);
    j["socle_degree"] = report.socle_degree;
    j["krull_dim"] = report.krull_dim;
    j["multiplicity"] = report.multiplicity;
    j["minimal_multiplicity"] = report.minimal_multiplicity;
    return j;
}

Json instance_to_json(const TheoremInstance& instance) {
    Json j = Json::object();
    j["theorem"] = theorem_name(instance.id);
    j["ring"] = ring_spec_to_json(instance.ring);
    if (instance.k > 0) j["k"] = instance.k;
    if (instance.witnesses) {
        Json w = Json::object();
        w["ideal"] = vecs_to_json(instance.witnesses->ideal_gens);
        w["f1"] = vec_to_json(instance.witnesses->f1);
        w["f2"] = vec_to_json(instance.witnesses->f2);
        w["theta1"] = vec_to_json(instance.witnesses->theta1);
        w["theta2"] = vec_to_json(instance.witnesses->theta2);
        j["witnesses"] = w;
    }
    return j;
}

TheoremInstance instance_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("instance must be an object");
    reject_unknown_fields(j, {"theorem", "ring", "k", "witnesses"}, "instance");
    TheoremInstance instance;
    if (!j.contains("theorem")) parse_fail("instance needs \"theorem\"");
    auto id = theorem_from_name(j.at("theorem").get<std::string>());
    if (!id) parse_fail("unknown theorem id " + j.at("theorem").dump());
    instance.id = *id;
    if (!j.contains("ring")) parse_fail("instance needs \"ring\"");
    instance.ring = ring_spec_from_json(j.at("ring"));
    if (j.contains("k")) instance.k = j.at("k").get<Coord>();
    if (j.contains("witnesses")) {
        const Json& w = j.at("witnesses");
        reject_unknown_fields(w, {"ideal", "f1", "f2", "theta1", "theta2"}, "witnesses");
        TheoremWitnesses wit;
        wit.ideal_gens = vecs_from_json(w.at("ideal"), "\"ideal\"");
        wit.f1 = vec_from_json(w.at("f1"), "\"f1\"");
        wit.f2 = vec_from_json(w.at("f2"), "\"f2\"");
        wit.theta1 = vec_from_json(w.at("theta1"), "\"theta1\"");
        wit.theta2 = vec_from_json(w.at("theta2"), "\"theta2\"");
        instance.witnesses = std::move(wit);
    }
    return instance;
}

TheoremInstance parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte);
        parse_fail("invalid JSON at line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + e.what());
    }
    return instance_from_json(j);
}

Json result_to_json(const TheoremInstanceResult& result) {
    Json j = Json::object();
    Json hyps = Json::object();
    for (const auto& [name, value] : result.hypotheses) hyps[name] = bool3_to_json(value);
    j["hypotheses"] = hyps;
    j["hypotheses_met"] = bool3_to_json(result.hypotheses_met);
    j["conclusion"] = bool3_to_json(result.conclusion);
    j["counterexample"] = result.counterexample;
    if (result.errored) j["error"] = result.note;
    else if (!result.note.empty()) j["note"] = result.note;
    return j;
}

Json campaign_config_to_json(const CampaignConfig& config) {
    Json j = Json::object();
    j["seed"] = config.seed;
    j["count"] = config.count;
    Json names = Json::array();
    for (TheoremId id : config.theorems) names.push_back(theorem_name(id));
    j["theorems"] = names;
    j["family"] = config.family;
    j["slope_bound"] = config.slope_bound;
    j["grading_range"] = config.grading_range;
    j["max_multiplicity"] = config.max_multiplicity;
    j["max_frobenius"] = config.max_frobenius;
    j["segment_max"] = config.segment_max;
    return j;
}

Json campaign_report_to_json(const CampaignReport& report) {
    Json j = Json::object();
    j["config"] = campaign_config_to_json(report.config);
    Json theorems = Json::object();
    for (const auto& [id, tally] : report.tallies) {
        Json t = Json::object();
        t["instances"] = tally.instances;
        t["hypotheses_met"] = tally.hypotheses_met;
        t["vacuous"] = tally.vacuous;
        t["vacuous_unknown"] = tally.vacuous_unknown;
        t["conclusion_verified"] = tally.conclusion_verified;
        t["counterexamples"] = tally.counterexamples;
        t["errors"] = tally.errors;
        theorems[theorem_name(id)] = t;
    }
    j["theorems"] = theorems;
    j["total_counterexamples"] = report.total_counterexamples;
    j["total_errors"] = report.total_errors;
    Json cxs = Json::array();
    for (std::size_t i = 0; i < report.counterexample_instances.size(); ++i) {
        Json cx = Json::object();
        cx["instance"] = instance_to_json(report.counterexample_instances[i]);
        cx["result"] = result_to_json(report.counterexample_results[i]);
        cxs.push_back(cx);
    }
    j["counterexamples"] = cxs;
    j["digest"] = report.digest;
    return j;
}

}  // namespace semigor
