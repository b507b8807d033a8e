#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigor/json_io.hpp"

using namespace semigor;

TEST_CASE("ring spec parsing") {
    RingSpecData spec = parse_ring_spec(
        R"({"dim":2,"generators":[[1,0],[1,1],[2,3],[3,5]],"grading":[1,0],"label":"worked-example"})");
    CHECK(spec.dim == 2);
    CHECK(spec.label == "worked-example");
    RingPtr ring = spec.build({});
    CHECK(ring->generators() == std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}, {3, 5}});
    CHECK(ring->is_normal());
}

TEST_CASE("numerical shorthand") {
    RingSpecData spec = parse_ring_spec(R"({"numerical":[3,4,5]})");
    RingPtr ring = spec.build({});
    CHECK(ring->dim() == 1);
    CHECK(ring->generators() == std::vector<Vec>{{3}, {4}, {5}});
}

TEST_CASE("spec errors carry positions and kinds") {
    try {
        parse_ring_spec("{\n  \"dim\": 2,\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(parse_ring_spec(R"({"dim":2,"generators":[],"grading":[1,1],"bogus":1})"),
                         doctest::Contains("unknown field"), Error);

    RingSpecData empty = parse_ring_spec(R"({"dim":2,"generators":[],"grading":[1,1]})");
    CHECK_THROWS_WITH_AS(empty.build({}), doctest::Contains("EmptyGenerators"), Error);
}

TEST_CASE("canonical generators pass through") {
    RingSpecData spec = parse_ring_spec(
        R"({"dim":2,"generators":[[1,0],[1,1],[2,3],[3,5]],"grading":[1,0],"canonical_generators":[[1,1],[2,3]]})");
    REQUIRE(spec.canonical_generators.has_value());
    CHECK(spec.canonical_generators->size() == 2);
}

TEST_CASE("spec serialization round-trips") {
    RingSpecData spec = parse_ring_spec(
        R"({"dim":2,"generators":[[1,0],[0,1]],"grading":[1,1],"label":"plane"})");
    RingSpecData again = ring_spec_from_json(ring_spec_to_json(spec));
    CHECK(again.dim == spec.dim);
    CHECK(again.generators == spec.generators);
    CHECK(again.grading_weights == spec.grading_weights);
    CHECK(again.label == spec.label);

    RingSpecData numerical = parse_ring_spec(R"({"numerical":[2,3],"label":"cusp"})");
    RingSpecData back = ring_spec_from_json(ring_spec_to_json(numerical));
    REQUIRE(back.numerical.has_value());
    CHECK(*back.numerical == std::vector<Coord>{2, 3});
}

TEST_CASE("classification reports serialize with stable fields") {
    RingSpecData spec = parse_ring_spec(R"({"numerical":[3,4,5],"label":"n345"})");
    RingPtr ring = spec.build({});
    ClassificationReport report = classify(ring, canonical_module(ring));
    Json j = classification_to_json(spec, report);
    CHECK(j["pseudo_gorenstein"] == true);
    CHECK(j["nearly_gorenstein"] == true);
    CHECK(j["gorenstein"] == false);
    CHECK(j["cm_type"] == 2);
    CHECK(j["a_invariant"] == 2);
    CHECK(j["natural_condition"] == true);
    CHECK(j["canonical_verified"] == true);
    CHECK(j["trace_generators"].dump() == "[[3],[4],[5]]");
}

TEST_CASE("tri-state booleans serialize distinctly") {
    RingSpecData spec = parse_ring_spec(
        R"({"dim":2,"generators":[[1,0],[1,1],[2,3],[3,5]],"grading":[1,0]})");
    RingPtr ring = spec.build({});
    Json j = classification_to_json(spec, classify(ring, canonical_module(ring)));
    CHECK(j["natural_condition"] == false);
    CHECK(j["semi_standard"] == false);
}

TEST_CASE("instance parse rejects unknown theorem ids") {
    CHECK_THROWS_WITH_AS(parse_instance(R"({"theorem":"T9","ring":{"numerical":[2,3]}})"),
                         doctest::Contains("unknown theorem"), Error);
    TheoremInstance inst =
        parse_instance(R"({"theorem":"T4","ring":{"numerical":[2,3]},"k":2})");
    CHECK(inst.id == TheoremId::T4);
    CHECK(inst.k == 2);
}

TEST_CASE("campaign reports render identical numbers in both formats") {
    CampaignConfig config;
    config.count = 8;
    config.theorems = {TheoremId::T1, TheoremId::T5};
    CampaignReport report = run_campaign(config);
    Json j = campaign_report_to_json(report);
    long met = 0, instances = 0;
    for (const auto& [id, tally] : report.tallies) {
        instances += tally.instances;
        met += tally.hypotheses_met;
        // Tally identity: every instance is exactly one of met/vacuous/unknown/error.
        CHECK(tally.instances == tally.hypotheses_met + tally.vacuous + tally.vacuous_unknown +
                                     tally.errors);
        CHECK(tally.hypotheses_met == tally.conclusion_verified + tally.counterexamples);
    }
    CHECK(j["theorems"]["T1"]["instances"].get<long>() +
              j["theorems"]["T5"]["instances"].get<long>() ==
          instances);
    CHECK(j["total_counterexamples"] == report.total_counterexamples);
    CHECK(!j.contains("elapsed_seconds"));
}
