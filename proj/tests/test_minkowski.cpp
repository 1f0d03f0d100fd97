#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "defo/minkowski.hpp"
#include "fixtures.hpp"

using namespace defo;

namespace {

// a random point of C(Q) with small nonnegative integer ray coefficients
QVec random_summand_param(const SummandSpace& s, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 3);
    QVec t(s.num_vars, Rat(0));
    for (const IVec& ray : s.c_rays) t = add(t, scale(Rat(d(rng)), to_qvec(ray)));
    return t;
}

}  // namespace

TEST_CASE("hexagon: V(Q) is two-dimensional") {
    SummandSpace s = summand_space(fixtures::hexagon_q());
    CHECK(s.num_vars == 4);
    CHECK(s.dim_v() == 2);
    CHECK(s.in_summand_cone(s.all_ones()));
    CHECK(same_lattice(s.vperp_lattice, IMat{{1, 1, -1, -1}, {0, 1, 1, -2}}, 4));
}

TEST_CASE("heptagon: C(Q) has the published extreme rays") {
    SummandSpace s = summand_space(fixtures::heptagon_q());
    CHECK(s.num_vars == 4);
    CHECK(s.dim_v() == 2);
    CHECK(s.c_rays == IMat{{2, 15, 0, 5}, {13, 0, 15, 10}});
    CHECK(s.in_summand_cone(s.all_ones()));
}

TEST_CASE("unit square: opposite edges scale together") {
    SummandSpace s = summand_space(cross_section(fixtures::square_cone(), fixtures::height_degree()));
    CHECK(s.num_vars == 4);
    CHECK(s.dim_v() == 2);
    REQUIRE(s.c_rays.size() == 2);
    // each ray is supported on one opposite pair
    for (const IVec& r : s.c_rays) {
        int support = 0;
        for (const Int& x : r) {
            CHECK((x == 0 || x == 1));
            if (x == 1) ++support;
        }
        CHECK(support == 2);
    }
}

TEST_CASE("t = 1 reproduces Q and t = 0 collapses it") {
    SummandSpace s = summand_space(fixtures::hexagon_q());
    SummandPolytope whole = summand_polytope(s, s.all_ones());
    for (size_t v = 0; v < whole.vertex_points.size(); ++v)
        CHECK(whole.vertex_points[v] == s.cross.vertices[v].point);

    SummandPolytope point = summand_polytope(s, QVec(s.num_vars, Rat(0)));
    for (const QVec& p : point.vertex_points) CHECK(is_zero(p));
    CHECK(point.tail == s.cross.tail_dirs);
}

TEST_CASE("invalid summand parameters are rejected") {
    SummandSpace s = summand_space(fixtures::hexagon_q());
    QVec bad(s.num_vars, Rat(1));
    bad[0] = -1;
    CHECK_THROWS_AS(summand_polytope(s, bad), hypothesis_error);
    QVec not_in_v(s.num_vars, Rat(0));
    not_in_v[0] = 1;  // breaks the closing equations
    CHECK_THROWS_AS(summand_polytope(s, not_in_v), hypothesis_error);
}

TEST_CASE("heptagon: vertex images are walk-independent") {
    SummandSpace s = summand_space(fixtures::heptagon_q());
    QVec t1 = to_qvec(IMat{{13, 0, 15, 10}}[0]);
    REQUIRE(s.in_summand_cone(t1));
    SummandPolytope p = summand_polytope(s, t1);

    // independent second walk: accumulate edge vectors backwards around the
    // polygon (vertex k reached by the path 0 <- 6 <- ... <- k+1)
    const CrossSection& q = s.cross;
    const int nv = (int)q.vertices.size();
    QVec acc(q.plane_basis.size(), Rat(0));
    for (int v = nv - 1; v >= 1; --v) {
        // edge v -> v+1 mod nv traversed against orientation
        int e = v;  // boundary edge with from == v
        REQUIRE(q.edges[e].from == v);
        acc = sub(acc, scale(t1[s.collapse[e]], q.edges[e].dir));
        CHECK(acc == p.vertex_points[v]);
    }
}

TEST_CASE("additivity of summand polytopes") {
    std::mt19937 rng(41);
    for (const CrossSection& q : {fixtures::hexagon_q(), fixtures::heptagon_q()}) {
        SummandSpace s = summand_space(q);
        for (int trial = 0; trial < 10; ++trial) {
            QVec t1 = random_summand_param(s, rng);
            QVec t2 = random_summand_param(s, rng);
            SummandPolytope sum = minkowski_sum(summand_polytope(s, t1), summand_polytope(s, t2));
            SummandPolytope direct = summand_polytope(s, add(t1, t2));
            CHECK(sum.vertex_points == direct.vertex_points);
        }
    }
}

TEST_CASE("sum with the zero summand is the identity") {
    SummandSpace s = summand_space(fixtures::hexagon_q());
    SummandPolytope p = summand_polytope(s, s.all_ones());
    SummandPolytope zero = summand_polytope(s, QVec(s.num_vars, Rat(0)));
    SummandPolytope sum = minkowski_sum(p, zero);
    CHECK(sum.vertex_points == p.vertex_points);

    // 1 + 1 = 2: doubling scales every vertex
    SummandPolytope twice = minkowski_sum(p, p);
    SummandPolytope direct = summand_polytope(s, scale(Rat(2), s.all_ones()));
    CHECK(twice.vertex_points == direct.vertex_points);
}
