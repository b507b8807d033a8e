#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigor/harness.hpp"
#include "semigor/parallel.hpp"
#include "semigor/semigroup.hpp"

using namespace semigor;

namespace {

RingPtr worked_ring(Limits limits = {}) {
    return new_ring(2, {{1, 0}, {1, 1}, {2, 3}, {3, 5}}, Grading{{1, 0}, 1}, limits);
}

}  // namespace

TEST_CASE("construction validates") {
    RingPtr p = worked_ring();
    CHECK(p->generators() == std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}, {3, 5}});
    CHECK(p->dim() == 2);

    CHECK_THROWS_WITH_AS(new_ring(2, {}, Grading{{1, 1}, 1}), doctest::Contains("EmptyGenerators"),
                         Error);
    CHECK_THROWS_WITH_AS(new_ring(2, {{2, 0}, {0, 2}}, Grading{{1, 1}, 1}),
                         doctest::Contains("GroupNotFull"), Error);
    CHECK_THROWS_WITH_AS(new_ring(2, {{1, 0}, {0, 1}}, Grading{{1, 0}, 1}),
                         doctest::Contains("NonPositiveDegree"), Error);
    CHECK_THROWS_WITH_AS(new_ring(2, {{1, 0}, {0, 1}, {0, 0}}, Grading{{1, 1}, 1}),
                         doctest::Contains("NonPositiveDegree"), Error);
}

TEST_CASE("membership on the worked ring") {
    RingPtr p = worked_ring();
    CHECK(p->membership({2, 2}));
    CHECK(!p->membership({1, 2}));
    CHECK(p->membership({0, 0}));
    CHECK(p->membership({3, 4}));
    CHECK(!p->membership({0, 1}));
}

TEST_CASE("membership is closed under addition") {
    SplitMix64 rng(3);
    RingPtr p = worked_ring();
    std::vector<Vec> members;
    for (Coord n = 0; n <= 12; ++n)
        for (const Vec& v : p->elements_of_degree(n)) members.push_back(v);
    for (int i = 0; i < 500; ++i) {
        const Vec& a = members[rng.below(members.size())];
        const Vec& b = members[rng.below(members.size())];
        CHECK(p->membership(vec_add(a, b)));
    }
}

TEST_CASE("minimal generators") {
    CHECK(worked_ring()->minimal_generators() ==
          std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}, {3, 5}});
    RingPtr n2 = new_ring(2, {{1, 0}, {0, 1}, {1, 1}}, Grading{{1, 1}, 1});
    CHECK(n2->minimal_generators() == std::vector<Vec>{{0, 1}, {1, 0}});
    RingPtr numerical = new_ring(1, {{3}, {4}, {5}, {8}}, Grading{{1}, 1});
    CHECK(numerical->minimal_generators() == std::vector<Vec>{{3}, {4}, {5}});
}

TEST_CASE("minimal generators regenerate the semigroup") {
    for (RingPtr ring : {worked_ring(), new_ring(1, {{3}, {4}, {5}, {8}}, Grading{{1}, 1})}) {
        RingPtr regen = new_ring(ring->dim(), ring->minimal_generators(), ring->grading());
        Coord bound = 3 * ring->max_generator_degree();
        for (Coord n = 0; n <= bound; ++n)
            CHECK(ring->elements_of_degree(n) == regen->elements_of_degree(n));
    }
}

TEST_CASE("normality") {
    CHECK(worked_ring()->is_normal());
    CHECK(new_ring(2, {{1, 0}, {0, 1}}, Grading{{1, 1}, 1})->is_normal());
    CHECK(!new_ring(1, {{2}, {3}}, Grading{{1}, 1})->is_normal());
    CHECK(new_ring(1, {{1}}, Grading{{1}, 1})->is_normal());
    // Missing (2,3) from the Hilbert basis.
    CHECK(!new_ring(2, {{1, 0}, {1, 1}, {3, 5}}, Grading{{1, 0}, 1})->is_normal());
    CHECK(new_ring(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Grading{{1, 1, 1}, 1})->is_normal());
}

TEST_CASE("membership agrees with the cone test on normal rings") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 8; ++trial) {
        RingPtr ring = random_normal_2d(rng, 6, 3);
        const Cone2D& cone = ring->cone_ambient();
        for (Coord x = -6; x <= 10; ++x)
            for (Coord y = -6; y <= 10; ++y) {
                Vec v{x, y};
                Coord raw = ring->grading().raw(v);
                if (raw < 0 || raw > 30) continue;
                CHECK(ring->membership(v) == cone.contains(v));
            }
    }
}

TEST_CASE("degree cap fails loudly") {
    Limits limits;
    limits.degree_cap = 6;
    RingPtr p = worked_ring(limits);
    CHECK_THROWS_WITH_AS(p->membership({40, 40}), doctest::Contains("DegreeCapExceeded"), Error);
}

TEST_CASE("radical test on the worked ring") {
    RingPtr p = worked_ring();
    std::vector<Vec> j{{1, 0}, {1, 1}};

    RadicalVerdict v = radical_test(p, j, {{3, 5}, {2, 3}});
    CHECK(v.entries[0].answer == RadicalAnswer::No);
    REQUIRE(v.entries[0].excluded_ray.has_value());
    CHECK(*v.entries[0].excluded_ray == Vec{3, 5});
    CHECK(v.entries[1].answer == RadicalAnswer::Yes);
    CHECK(v.entries[1].power == 2);
    CHECK(v.m_primary == Bool3::False);

    // Yes witnesses re-verify: power * target lands in the ideal module.
    const RadicalEntry& yes = v.entries[1];
    Vec scaled = vec_scale(yes.power, yes.target);
    bool inside = false;
    for (const Vec& g : j)
        if (p->membership(vec_sub(scaled, g))) inside = true;
    CHECK(inside);

    RadicalVerdict whole = radical_test(p, p->minimal_generators(), {{1, 0}});
    CHECK(whole.entries[0].answer == RadicalAnswer::Yes);
    CHECK(whole.entries[0].power == 1);
    CHECK(whole.m_primary == Bool3::True);

    RadicalVerdict zero = radical_test(p, {}, {{1, 0}});
    CHECK(zero.entries[0].answer == RadicalAnswer::No);
    CHECK(zero.m_primary == Bool3::False);
}

TEST_CASE("radical test rejects non-ideal input") {
    RingPtr p = worked_ring();
    CHECK_THROWS_AS(radical_test(p, {{0, -1}}, {{1, 0}}), Error);
    CHECK_THROWS_AS(radical_test(p, {{1, 0}}, {{0, 0}}), Error);
}

TEST_CASE("numerical radical search certifies powers") {
    RingPtr r = new_ring(1, {{3}, {4}, {5}}, Grading{{1}, 1});
    RadicalVerdict v = radical_test(r, {{3}}, {{4}, {5}});
    for (const RadicalEntry& e : v.entries) {
        CHECK(e.answer == RadicalAnswer::Yes);
        CHECK(r->membership(vec_sub(vec_scale(e.power, e.target), Vec{3})));
    }
    CHECK(v.m_primary == Bool3::True);
}

TEST_CASE("slice memo is safe under concurrent fills") {
    RingPtr fresh = worked_ring();
    RingPtr reference = worked_ring();
    std::vector<Vec> queries;
    for (Coord x = 0; x <= 20; ++x)
        for (Coord y = 0; y <= 20; ++y) queries.push_back({x, y});

    std::vector<char> expected(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i)
        expected[i] = reference->membership(queries[i]) ? 1 : 0;

    std::vector<char> got = par::map_flags(
        queries.size(), [&](std::size_t i) { return fresh->membership(queries[i]); }, true);
    CHECK(got == expected);
}

TEST_CASE("free rings answer membership without the cone machinery") {
    RingPtr n3 = new_ring(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Grading{{1, 2, 1}, 1});
    CHECK(n3->is_free());
    CHECK(n3->membership({5, 2, 7}));
    CHECK(!n3->membership({1, -1, 0}));
}
