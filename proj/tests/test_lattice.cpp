#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "semigor/harness.hpp"
#include "semigor/lattice.hpp"

using namespace semigor;

TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    Coord big = std::numeric_limits<Coord>::max();
    CHECK_THROWS_AS(checked_add(big, 1), Error);
    CHECK_THROWS_AS(checked_mul(big, 2), Error);
    CHECK_THROWS_AS(vec_add({big}, {big}), Error);
}

TEST_CASE("primitive divides out the gcd and keeps direction") {
    CHECK(primitive({6, 10}) == Vec{3, 5});
    CHECK(primitive({3, 5}) == Vec{3, 5});
    CHECK(primitive({0, -4}) == Vec{0, -1});
    CHECK_THROWS_AS(primitive({0, 0}), Error);
}

TEST_CASE("primitive is idempotent on random vectors") {
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Vec v{rng.range(-40, 40), rng.range(-40, 40)};
        if (is_zero(v)) continue;
        CHECK(primitive(primitive(v)) == primitive(v));
    }
}

TEST_CASE("cone position matches the worked example") {
    Cone2D cone = Cone2D::from_rays({1, 0}, {3, 5});
    CHECK(cone.position({1, 1}).region == ConeRegion::Interior);
    CHECK(cone.position({1, 0}).region == ConeRegion::Boundary);
    CHECK(cone.position({1, 0}).ray == BoundaryRay::Low);
    CHECK(cone.position({3, 5}).ray == BoundaryRay::High);
    CHECK(cone.position({1, 2}).region == ConeRegion::Outside);
    CHECK(cone.position({0, 0}).region == ConeRegion::Boundary);
    CHECK(cone.position({0, 0}).ray == BoundaryRay::Both);
    CHECK_THROWS_AS(cone.position({1, 2, 3}), Error);
}

TEST_CASE("cone orientation is normalised") {
    Cone2D a = Cone2D::from_rays({3, 5}, {1, 0});
    CHECK(a.ray_low() == Vec{1, 0});
    CHECK(a.ray_high() == Vec{3, 5});
    CHECK(a.det() == 5);
    CHECK_THROWS_AS(Cone2D::from_rays({1, 1}, {2, 2}), Error);
}

TEST_CASE("interior absorbs boundary under addition") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Vec r1{rng.range(1, 6), rng.range(0, 6)};
        Vec r2{rng.range(0, 6), rng.range(1, 6)};
        if (is_zero(r1) || is_zero(r2)) continue;
        Coord det = r1[0] * r2[1] - r1[1] * r2[0];
        if (det == 0) continue;
        Cone2D cone = Cone2D::from_rays(r1, r2);
        Vec v{rng.range(-8, 8), rng.range(-8, 8)};
        Vec w{rng.range(-8, 8), rng.range(-8, 8)};
        auto pv = cone.position(v), pw = cone.position(w);
        if (pv.region == ConeRegion::Interior && pw.region != ConeRegion::Outside)
            CHECK(cone.position(vec_add(v, w)).region == ConeRegion::Interior);
    }
}

TEST_CASE("parallelepiped points") {
    CHECK(Cone2D::from_rays({1, 0}, {0, 1}).parallelepiped_points() == std::vector<Vec>{{0, 0}});
    auto pts = Cone2D::from_rays({1, 0}, {3, 5}).parallelepiped_points();
    CHECK(pts.size() == 5);
    CHECK(std::count(pts.begin(), pts.end(), Vec{0, 0}) == 1);
    CHECK(std::count(pts.begin(), pts.end(), Vec{1, 1}) == 1);
    CHECK(std::count(pts.begin(), pts.end(), Vec{2, 3}) == 1);
    CHECK(Cone2D::from_rays({1, 0}, {1, 2}).parallelepiped_points() ==
          std::vector<Vec>{{0, 0}, {1, 1}});
}

TEST_CASE("parallelepiped cardinality equals the determinant") {
    SplitMix64 rng(17);
    int done = 0;
    while (done < 200) {
        Vec a{rng.range(-7, 7), rng.range(-7, 7)};
        Vec b{rng.range(-7, 7), rng.range(-7, 7)};
        if (is_zero(a) || is_zero(b)) continue;
        if (a[0] * b[1] - a[1] * b[0] == 0) continue;
        Cone2D cone = Cone2D::from_rays(a, b);
        CHECK(static_cast<Coord>(cone.parallelepiped_points().size()) == cone.det());
        ++done;
    }
}

TEST_CASE("hilbert basis of small cones") {
    CHECK(hilbert_basis_2d(Cone2D::from_rays({1, 0}, {3, 5})) ==
          std::vector<Vec>{{1, 0}, {1, 1}, {2, 3}, {3, 5}});
    CHECK(hilbert_basis_2d(Cone2D::from_rays({1, 0}, {0, 1})) == std::vector<Vec>{{0, 1}, {1, 0}});
    CHECK(hilbert_basis_2d(Cone2D::from_rays({1, 0}, {1, 2})) ==
          std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("hilbert basis elements are irreducible and generate") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Vec b{rng.range(1, 9), rng.range(1, 9)};
        Cone2D cone = Cone2D::from_rays({1, 0}, primitive(b));
        auto basis = hilbert_basis_2d(cone);
        for (const Vec& p : basis) CHECK(cone.contains(p));
        // Every cone point in a box is a nonnegative combination: greedy
        // subtraction must reach zero.
        for (Coord x = 0; x <= 6; ++x) {
            for (Coord y = 0; y <= 6; ++y) {
                Vec v{x, y};
                if (!cone.contains(v)) continue;
                bool progress = true;
                while (!is_zero(v) && progress) {
                    progress = false;
                    for (const Vec& p : basis) {
                        Vec rest = vec_sub(v, p);
                        if (cone.contains(rest)) {
                            v = rest;
                            progress = true;
                            break;
                        }
                    }
                }
                CHECK(is_zero(v));
            }
        }
    }
}

TEST_CASE("lattice basis solves and rejects") {
    auto full = LatticeBasis::from_generators(2, {{1, 0}, {0, 1}, {1, 1}});
    REQUIRE(full.has_value());
    CHECK(full->index() == 1);
    CHECK(full->is_identity());

    auto doubled = LatticeBasis::from_generators(2, {{2, 0}, {0, 2}});
    REQUIRE(doubled.has_value());
    CHECK(doubled->index() == 4);
    CHECK(doubled->to_internal({2, 2}).has_value());
    CHECK(!doubled->to_internal({1, 0}).has_value());
    Vec inside = *doubled->to_internal({4, 2});
    CHECK(doubled->to_ambient(inside) == Vec{4, 2});

    CHECK(!LatticeBasis::from_generators(2, {{1, 1}, {2, 2}}).has_value());
}

TEST_CASE("lattice basis round-trips random sublattices") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec> gens;
        for (int i = 0; i < 4; ++i) gens.push_back({rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9)});
        auto basis = LatticeBasis::from_generators(3, gens);
        if (!basis) continue;
        for (const Vec& g : gens) {
            auto u = basis->to_internal(g);
            REQUIRE(u.has_value());
            CHECK(basis->to_ambient(*u) == g);
        }
    }
}

TEST_CASE("grading divisor checks divisibility") {
    Grading g{{1, 1}, 2};
    CHECK(g.degree({1, 1}) == 1);
    CHECK(g.degree({3, 1}) == 2);
    CHECK_THROWS_AS(g.degree({1, 0}), Error);
}
