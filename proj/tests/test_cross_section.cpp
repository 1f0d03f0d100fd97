#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defo/cross_section.hpp"
#include "defo/linalg.hpp"
#include "fixtures.hpp"

using namespace defo;
using fixtures::qvec;

namespace {

QVec pt(int a, int b) { return {Rat(a), Rat(b)}; }
QVec pt(Rat a, Rat b) { return {a, b}; }

}  // namespace

TEST_CASE("hexagonal section matches the published data") {
    CrossSection q = fixtures::hexagon_q();

    REQUIRE(q.vertices.size() == 6);
    std::vector<QVec> expect = {pt(0, 0), pt(1, 0),           pt(2, 1),
                                pt(1, 2), pt(Rat(1, 2), Rat(2)), pt(Rat(0), Rat(1, 2))};
    for (int i = 0; i < 6; ++i) CHECK(q.vertices[i].point == expect[i]);
    std::vector<bool> lattice = {true, true, true, true, false, false};
    for (int i = 0; i < 6; ++i) CHECK(q.vertices[i].lattice == lattice[i]);

    CHECK(q.bounded);
    CHECK(q.tail_dirs.empty());

    REQUIRE(q.num_edges() == 6);
    std::vector<QVec> d = {pt(1, 0),           pt(1, 1),
                           pt(-1, 1),          pt(Rat(-1, 2), Rat(0)),
                           pt(Rat(-1, 2), Rat(-3, 2)), pt(Rat(0), Rat(-1, 2))};
    for (int i = 0; i < 6; ++i) CHECK(q.edges[i].dir == d[i]);
    for (int i = 0; i < 6; ++i) {
        CHECK(q.edges[i].from == i);
        CHECK(q.edges[i].to == (i + 1) % 6);
    }

    // components {1},{2},{3},{4,5,6}
    CHECK(q.num_components == 4);
    CHECK(q.edge_component == std::vector<int>{0, 1, 2, 3, 3, 3});

    // the polygon is its own single compact 2-face, positively oriented
    REQUIRE(q.two_faces.size() == 1);
    CHECK(q.two_faces[0].signs == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("heptagonal section matches the published data") {
    CrossSection q = fixtures::heptagon_q();

    REQUIRE(q.vertices.size() == 7);
    std::vector<QVec> expect = {pt(0, 0),
                                pt(Rat(3), Rat(-1, 2)),
                                pt(5, 0),
                                pt(5, 1),
                                pt(Rat(24, 5), Rat(7, 5)),
                                pt(Rat(3), Rat(5, 2)),
                                pt(2, 3)};
    for (int i = 0; i < 7; ++i) CHECK(q.vertices[i].point == expect[i]);

    REQUIRE(q.num_edges() == 7);
    std::vector<QVec> d = {pt(Rat(3), Rat(-1, 2)), pt(Rat(2), Rat(1, 2)),
                           pt(0, 1),               pt(Rat(-1, 5), Rat(2, 5)),
                           pt(Rat(-9, 5), Rat(11, 10)), pt(Rat(-1), Rat(1, 2)),
                           pt(-2, -3)};
    for (int i = 0; i < 7; ++i) CHECK(q.edges[i].dir == d[i]);

    // components {1,2},{3},{4,5,6},{7}
    CHECK(q.num_components == 4);
    CHECK(q.edge_component == std::vector<int>{0, 0, 1, 2, 2, 2, 3});

    REQUIRE(q.two_faces.size() == 1);
    CHECK(q.two_faces[0].signs == std::vector<int>(7, 1));
}

TEST_CASE("unit square section") {
    CrossSection q = cross_section(fixtures::square_cone(), fixtures::height_degree());
    CHECK(q.vertices.size() == 4);
    CHECK(q.num_edges() == 4);
    CHECK(q.num_components == 4);
    for (const CSVertex& v : q.vertices) CHECK(v.lattice);
    REQUIRE(q.two_faces.size() == 1);
}

TEST_CASE("hypothesis violations are reported") {
    PointedCone c = fixtures::hexagon_cone();
    CHECK_THROWS_AS(cross_section(c, {0, 0, 2}), hypothesis_error);   // not primitive
    CHECK_THROWS_AS(cross_section(c, {0, 0, -1}), hypothesis_error);  // negative on rays
    // no lattice vertex: all rays at height 2
    PointedCone doubled = PointedCone::from_rays({{1, 0, 2}, {-1, 0, 2}, {0, 1, 2}, {0, -1, 2}}, 3);
    CHECK_THROWS_AS(cross_section(doubled, {0, 0, 1}), hypothesis_error);
}

TEST_CASE("unbounded section: tail rays and path ordering") {
    // sigma over a strip: two vertices, one tail direction
    PointedCone c = PointedCone::from_rays({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}, 3);
    CrossSection q = cross_section(c, {0, 0, 1});
    CHECK(!q.bounded);
    REQUIRE(q.tail_dirs.size() == 1);
    CHECK(q.vertices.size() == 2);
    CHECK(q.num_edges() == 1);
    CHECK(q.two_faces.empty());
    // R in the interior iff the tail cone is trivial
    CHECK(fixtures::hexagon_q().bounded);
}

TEST_CASE("cross-section reconstruction recovers the cone") {
    for (const PointedCone& c : {fixtures::hexagon_cone(), fixtures::heptagon_cone()}) {
        CrossSection q = cross_section(c, fixtures::height_degree());
        IMat gens;
        for (const CSVertex& v : q.vertices) {
            // (v, 1) in ambient coordinates
            QVec amb = to_qvec(q.origin_lattice_point);
            for (size_t j = 0; j < q.plane_basis.size(); ++j)
                amb = add(amb, scale(v.point[j], to_qvec(q.plane_basis[j])));
            gens.push_back(primitive_of(amb));
        }
        for (const IVec& t : q.tail_dirs) {
            QVec amb(q.r_covector.size(), Rat(0));
            for (size_t j = 0; j < q.plane_basis.size(); ++j)
                amb = add(amb, scale(Rat(t[j]), to_qvec(q.plane_basis[j])));
            gens.push_back(primitive_of(amb));
        }
        PointedCone rebuilt = PointedCone::from_rays(gens, c.dim);
        CHECK(rebuilt.rays == c.rays);
    }
}

TEST_CASE("two-face cycles close exactly") {
    for (const CrossSection& q : {fixtures::hexagon_q(), fixtures::heptagon_q()}) {
        for (const CSTwoFace& tf : q.two_faces) {
            QVec total(q.plane_basis.size(), Rat(0));
            for (int e = 0; e < q.num_edges(); ++e)
                if (tf.signs[e] != 0) total = add(total, scale(Rat(tf.signs[e]), q.edges[e].dir));
            CHECK(is_zero(total));
        }
    }
}

TEST_CASE("non-lattice vertices join exactly their incident edges") {
    CrossSection q = fixtures::heptagon_q();
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.vertices[v].lattice) continue;
        std::vector<int> incident;
        for (int e = 0; e < q.num_edges(); ++e)
            if (q.edges[e].from == (int)v || q.edges[e].to == (int)v) incident.push_back(e);
        REQUIRE(incident.size() == 2);
        CHECK(q.edge_component[incident[0]] == q.edge_component[incident[1]]);
    }
}
