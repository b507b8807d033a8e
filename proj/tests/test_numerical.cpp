#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigor/harness.hpp"
#include "semigor/numerical.hpp"

using namespace semigor;

TEST_CASE("profile of <3,4,5>") {
    NumericalSemigroup ns = numerical_profile({3, 4, 5});
    CHECK(ns.generators == std::vector<Coord>{3, 4, 5});
    CHECK(ns.multiplicity == 3);
    CHECK(ns.frobenius == 2);
    CHECK(ns.gaps == std::vector<Coord>{1, 2});
    CHECK(ns.genus == 2);
    CHECK(ns.pseudo_frobenius == std::vector<Coord>{1, 2});
    CHECK(ns.type == 2);
    CHECK(!ns.symmetric);
    CHECK(ns.almost_symmetric);
    CHECK(ns.apery == std::vector<Coord>{0, 4, 5});
}

TEST_CASE("profile of <2,3>") {
    NumericalSemigroup ns = numerical_profile({2, 3});
    CHECK(ns.frobenius == 1);
    CHECK(ns.gaps == std::vector<Coord>{1});
    CHECK(ns.pseudo_frobenius == std::vector<Coord>{1});
    CHECK(ns.type == 1);
    CHECK(ns.symmetric);
    CHECK(ns.almost_symmetric);
}

TEST_CASE("profile of N is the documented degenerate case") {
    NumericalSemigroup ns = numerical_profile({1});
    CHECK(ns.frobenius == -1);
    CHECK(ns.gaps.empty());
    CHECK(ns.pseudo_frobenius == std::vector<Coord>{-1});
    CHECK(ns.type == 1);
    CHECK(ns.symmetric);
    CHECK(ns.almost_symmetric);
    CHECK(ns.apery == std::vector<Coord>{0});
}

TEST_CASE("profile validation") {
    CHECK_THROWS_WITH_AS(numerical_profile({}), doctest::Contains("EmptyInput"), Error);
    CHECK_THROWS_WITH_AS(numerical_profile({4, 6}), doctest::Contains("GcdNotOne"), Error);
    CHECK_THROWS_WITH_AS(numerical_profile({0, 3}), doctest::Contains("NonPositiveDegree"), Error);
}

TEST_CASE("redundant generators are discarded") {
    NumericalSemigroup ns = numerical_profile({3, 4, 5, 8});
    CHECK(ns.generators == std::vector<Coord>{3, 4, 5});
}

TEST_CASE("to_ring embeds as a d=1 ring") {
    NumericalSemigroup ns = numerical_profile({3, 4, 5});
    RingPtr ring = to_ring(ns);
    CHECK(ring->dim() == 1);
    CHECK(ring->generators() == std::vector<Vec>{{3}, {4}, {5}});
    CHECK(ring->membership({7}));
    CHECK(!ring->membership({2}));

    RingPtr n = to_ring(numerical_profile({1}));
    CHECK(n->generators() == std::vector<Vec>{{1}});
}

TEST_CASE("symmetry duality across the enumerated corpus") {
    // Independent routes: gap duality versus |PF| = 1, for every semigroup
    // with Frobenius number up to 40 in the bounded-multiplicity family.
    auto corpus = exhaustive_numerical(8, 40);
    CHECK(corpus.size() > 30000);
    for (const NumericalSemigroup& ns : corpus) {
        CHECK(ns.symmetric == (ns.type == 1));
        CHECK(2 * ns.genus >= ns.frobenius + 1);
        CHECK((2 * ns.genus == ns.frobenius + 1) == ns.symmetric);
    }
}

TEST_CASE("PF elements satisfy the definition") {
    auto corpus = exhaustive_numerical(5, 20);
    for (const NumericalSemigroup& ns : corpus) {
        if (ns.multiplicity == 1) continue;
        Coord limit = ns.frobenius + ns.generators.back();
        for (Coord x : ns.pseudo_frobenius) {
            CHECK(!ns.contains(x));
            for (Coord s = 1; s <= limit; ++s) {
                if (!ns.contains(s)) continue;
                CHECK(ns.contains(x + s));
            }
        }
        // F is the largest gap and belongs to PF.
        CHECK(ns.pseudo_frobenius.back() == ns.frobenius);
    }
}

TEST_CASE("apery set structure") {
    auto corpus = exhaustive_numerical(6, 18);
    for (const NumericalSemigroup& ns : corpus) {
        CHECK(static_cast<Coord>(ns.apery.size()) == ns.multiplicity);
        for (Coord r = 0; r < ns.multiplicity; ++r) {
            Coord w = ns.apery[static_cast<std::size_t>(r)];
            CHECK(w % ns.multiplicity == r);
            CHECK(ns.contains(w));
            CHECK(!ns.contains(w - ns.multiplicity));
        }
    }
}

TEST_CASE("random numerical semigroups respect their bounds") {
    SplitMix64 rng(99);
    for (int i = 0; i < 60; ++i) {
        NumericalSemigroup ns = random_numerical(rng, 6, 30);
        CHECK(ns.multiplicity <= 6);
        CHECK(ns.frobenius <= 30);
        CHECK(ns.contains(0));
        CHECK(ns.contains(ns.frobenius + 1));
    }
}
