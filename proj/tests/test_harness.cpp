#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigor/harness.hpp"
#include "semigor/json_io.hpp"

using namespace semigor;

TEST_CASE("random 2d rings are normal by construction") {
    SplitMix64 rng(1);
    for (int i = 0; i < 20; ++i) {
        RingPtr ring = random_normal_2d(rng, 8, 4);
        CHECK(ring->is_normal());
        CHECK(ring->dim() == 2);
        for (const Vec& g : ring->generators()) CHECK(ring->degree(g) > 0);
    }
}

TEST_CASE("segment rings are standard graded") {
    SplitMix64 rng(2);
    for (int i = 0; i < 10; ++i) {
        RingPtr ring = segment_ring(rng.range(1, 6), rng.range(-2, 2));
        CHECK(ring->indeg() == 1);
        CHECK(ring->max_generator_degree() == 1);
        CHECK(ring->is_normal());
    }
}

TEST_CASE("exhaustive numerical enumeration") {
    auto tiny = exhaustive_numerical(1, 10);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny.front().generators == std::vector<Coord>{1});

    auto corpus = exhaustive_numerical(3, 10);
    bool has_23 = false, has_345 = false;
    for (const NumericalSemigroup& ns : corpus) {
        CHECK(ns.multiplicity <= 3);
        CHECK(ns.frobenius <= 10);
        if (ns.generators == std::vector<Coord>{2, 3}) has_23 = true;
        if (ns.generators == std::vector<Coord>{3, 4, 5}) has_345 = true;
    }
    CHECK(has_23);
    CHECK(has_345);

    // No duplicates: the removal tree visits each semigroup once.
    std::vector<std::vector<Coord>> keys;
    for (const NumericalSemigroup& ns : corpus) keys.push_back(ns.generators);
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("T1 is vacuous on the pinned ring and holds on the plane") {
    TheoremInstance pinned;
    pinned.id = TheoremId::T1;
    pinned.ring.dim = 2;
    pinned.ring.generators = {{1, 0}, {1, 1}, {2, 3}, {3, 5}};
    pinned.ring.grading_weights = {1, 0};
    TheoremInstanceResult r = check_theorem(pinned);
    CHECK(r.hypotheses_met == Bool3::False);  // the indeg-part ideal is not m-primary
    CHECK(!r.counterexample);

    TheoremInstance plane;
    plane.id = TheoremId::T1;
    plane.ring.dim = 2;
    plane.ring.generators = {{1, 0}, {0, 1}};
    plane.ring.grading_weights = {1, 1};
    TheoremInstanceResult r2 = check_theorem(plane);
    CHECK(r2.hypotheses_met == Bool3::True);
    CHECK(r2.conclusion == Bool3::True);
}

TEST_CASE("T5 evaluates the worked witness") {
    TheoremInstance inst;
    inst.id = TheoremId::T5;
    inst.ring.dim = 2;
    inst.ring.generators = {{1, 0}, {0, 1}};
    inst.ring.grading_weights = {1, 1};
    inst.witnesses = TheoremWitnesses{{{1, 0}, {0, 1}}, {1, 0}, {0, 1}, {1, 0}, {0, 1}};
    TheoremInstanceResult r = check_theorem(inst);
    CHECK(r.hypotheses_met == Bool3::True);
    CHECK(r.conclusion == Bool3::True);
    CHECK(r.note == "i=2");

    // Same instance with f2 a multiple of f1 is vacuous.
    inst.witnesses->f2 = Vec{2, 0};
    TheoremInstanceResult r2 = check_theorem(inst);
    CHECK(r2.hypotheses_met == Bool3::False);
}

TEST_CASE("T5 without witnesses reports an error result") {
    TheoremInstance inst;
    inst.id = TheoremId::T5;
    inst.ring.dim = 2;
    inst.ring.generators = {{1, 0}, {0, 1}};
    inst.ring.grading_weights = {1, 1};
    TheoremInstanceResult r = check_theorem(inst);
    CHECK(r.errored);
}

TEST_CASE("T6 inclusion on the plane") {
    TheoremInstance inst;
    inst.id = TheoremId::T6;
    inst.ring.dim = 2;
    inst.ring.generators = {{1, 0}, {0, 1}};
    inst.ring.grading_weights = {1, 1};
    inst.k = 3;
    TheoremInstanceResult r = check_theorem(inst);
    CHECK(r.hypotheses_met == Bool3::True);
    CHECK(r.conclusion == Bool3::True);
}

TEST_CASE("campaigns are deterministic and schedule independent") {
    CampaignConfig config;
    config.seed = 7;
    config.count = 24;
    config.theorems = {TheoremId::T1, TheoremId::T3, TheoremId::T5, TheoremId::T6};

    config.parallel = true;
    CampaignReport a = run_campaign(config);
    CampaignReport b = run_campaign(config);
    CHECK(a.digest == b.digest);

    config.parallel = false;
    CampaignReport serial = run_campaign(config);
    CHECK(serial.digest == a.digest);

    CHECK(campaign_report_to_json(a).dump() == campaign_report_to_json(serial).dump());
    CHECK(a.total_counterexamples == 0);
    CHECK(a.total_errors == 0);
}

TEST_CASE("different seeds explore different instances") {
    CampaignConfig a, b;
    a.count = b.count = 10;
    a.seed = 1;
    b.seed = 2;
    a.theorems = b.theorems = {TheoremId::T1};
    CHECK(run_campaign(a).digest != run_campaign(b).digest);
}

TEST_CASE("instance payloads round-trip through JSON") {
    CampaignConfig config;
    config.count = 6;
    for (int i = 0; i < config.count; ++i) {
        GeneratedInstance gen = generate_instance(config, i);
        TheoremInstance inst;
        inst.id = TheoremId::T5;
        inst.ring = gen.spec;
        inst.witnesses = gen.witnesses;
        inst.k = gen.veronese_k;

        TheoremInstance back = instance_from_json(instance_to_json(inst));
        TheoremInstanceResult direct = check_theorem(inst);
        TheoremInstanceResult reloaded = check_theorem(back);
        CHECK(direct.hypotheses_met == reloaded.hypotheses_met);
        CHECK(direct.conclusion == reloaded.conclusion);
        CHECK(direct.counterexample == reloaded.counterexample);
    }
}

TEST_CASE("empty theorem list yields an empty report") {
    CampaignConfig config;
    config.count = 5;
    config.theorems = {};
    CampaignReport report = run_campaign(config);
    CHECK(report.tallies.empty());
    CHECK(report.total_counterexamples == 0);
}

TEST_CASE("T4 campaign runs clean on the mixed family") {
    CampaignConfig config;
    config.count = 40;
    config.seed = 11;
    config.theorems = {TheoremId::T4};
    CampaignReport report = run_campaign(config);
    CHECK(report.total_errors == 0);
    CHECK(report.total_counterexamples == 0);
    // a in kZ is rare but not empty on this family.
    CHECK(report.tallies.front().second.hypotheses_met + report.tallies.front().second.vacuous ==
          40);
}

TEST_CASE("numerical family campaign classifies without errors") {
    CampaignConfig config;
    config.family = "numerical";
    config.count = 30;
    config.theorems = {TheoremId::T1, TheoremId::T5};
    CampaignReport report = run_campaign(config);
    CHECK(report.total_errors == 0);
    CHECK(report.total_counterexamples == 0);
    // d = 1 makes every 2-dimensional hypothesis false.
    for (const auto& [id, tally] : report.tallies) CHECK(tally.hypotheses_met == 0);
}
