#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "defo/cone.hpp"
#include "oracles.hpp"

using namespace defo;

TEST_CASE("first orthant is self-dual") {
    PointedCone c = PointedCone::from_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(c.rays == IMat{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    PointedCone d = dual_cone(c);
    CHECK(d.rays == c.rays);
    CHECK(c.smooth2faces);
}

TEST_CASE("redundant generators are dropped") {
    PointedCone c = PointedCone::from_rays({{1, 0}, {0, 1}, {1, 1}, {2, 2}}, 2);
    CHECK(c.rays == IMat{{0, 1}, {1, 0}});
}

TEST_CASE("non-pointed input is rejected") {
    CHECK_THROWS_AS(PointedCone::from_rays({{1, 0}, {-1, 0}, {0, 1}}, 2), hypothesis_error);
}

TEST_CASE("lower-dimensional cone carries equations") {
    PointedCone c = PointedCone::from_rays({{1, 0, 0}, {1, 1, 0}}, 3);
    CHECK(!c.full_dimensional());
    CHECK(c.equations.size() == 1);
    CHECK(c.contains({2, 1, 0}));
    CHECK(!c.contains({0, 0, 1}));
    CHECK_THROWS_AS(dual_cone(c), hypothesis_error);
}

TEST_CASE("double duality on random pointed cones") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = 2 + trial % 3;  // 2..4
        PointedCone c = oracle::random_pointed_cone(rng, dim, dim + 2, 4);
        PointedCone dd = dual_cone(dual_cone(c));
        CHECK(dd.rays == c.rays);
    }
}

TEST_CASE("extreme rays agree with subset-enumeration oracle") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 50) {
        int dim = 2 + done % 3;
        std::uniform_int_distribution<int> d(-4, 4);
        IMat ineqs;
        for (int i = 0; i < dim + 3; ++i) {
            IVec h(dim);
            for (Int& x : h) x = d(rng);
            if (!is_zero(h)) ineqs.push_back(h);
        }
        if (ineqs.empty() || rank(ineqs) < dim) continue;  // oracle needs pointedness
        DDResult r = rays_from_inequalities(ineqs, dim);
        if (!r.lineality.empty()) continue;
        IMat expect = oracle::ray_enumeration(ineqs, dim);
        std::sort(expect.begin(), expect.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
        CHECK(r.rays == expect);
        ++done;
    }
}

TEST_CASE("faces of the first orthant") {
    PointedCone c = PointedCone::from_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    auto f2 = faces(c, 2);
    CHECK(f2.size() == 3);
    for (const auto& f : f2) CHECK(f.size() == 2);
    auto f3 = faces(c, 3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == std::vector<int>{0, 1, 2});
    auto f0 = faces(c, 0);
    REQUIRE(f0.size() == 1);
    CHECK(f0[0].empty());
}

TEST_CASE("six 2-faces of the hexagonal worked-example cone") {
    PointedCone c = PointedCone::from_rays(
        {{0, 0, 1}, {1, 0, 1}, {2, 1, 1}, {1, 2, 1}, {1, 4, 2}, {0, 1, 2}}, 3);
    CHECK(c.rays.size() == 6);
    auto f2 = faces(c, 2);
    CHECK(f2.size() == 6);
    // supporting-hyperplane oracle: a ray pair spans a 2-face iff some
    // facet covector vanishes on both
    int count = 0;
    for (size_t i = 0; i < c.rays.size(); ++i) {
        for (size_t j = i + 1; j < c.rays.size(); ++j) {
            bool found = false;
            for (const IVec& f : c.facets)
                if (dot(f, c.rays[i]) == 0 && dot(f, c.rays[j]) == 0) found = true;
            if (found) ++count;
        }
    }
    CHECK(count == 6);
    CHECK(c.smooth2faces);
}

TEST_CASE("codimension-two smoothness") {
    // non-primitive edge direction: rays (0,0,1),(2,0,1) span a non-smooth 2-face
    PointedCone bad = PointedCone::from_rays({{0, 0, 1}, {2, 0, 1}, {0, 1, 1}}, 3);
    CHECK(!check_codim2_smooth(bad));
    PointedCone good = PointedCone::from_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(check_codim2_smooth(good));
}
