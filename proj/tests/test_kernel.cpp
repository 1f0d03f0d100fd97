#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "defo/lattice.hpp"
#include "defo/linalg.hpp"

using namespace defo;

namespace {

IMat random_imat(std::mt19937& rng, int rows, int cols, int box) {
    std::uniform_int_distribution<int> d(-box, box);
    IMat m(rows, IVec(cols));
    for (auto& r : m)
        for (auto& x : r) x = d(rng);
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    IMat c(a.size(), IVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Int det(IMat m) {
    // fraction-free Bareiss
    const int n = (int)m.size();
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("hnf identity and fixed points") {
    IMat id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto r = hermite_normal_form(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IMat m = {{2, 4}, {0, 6}};
    auto r2 = hermite_normal_form(m);
    CHECK(r2.h == m);
    CHECK(r2.u == IMat{{1, 0}, {0, 1}});
}

TEST_CASE("hnf random matrices: u*m = h, unimodular, idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IMat m = random_imat(rng, 4, 6, 9);
        auto r = hermite_normal_form(m);
        CHECK(mat_mul(r.u, m) == r.h);
        Int d = det(r.u);
        CHECK((d == 1 || d == -1));
        CHECK(is_hnf(r.h));
        // pivot structure: row-echelon with positive pivots
        int lastcol = -1;
        for (const IVec& row : r.h) {
            int p = -1;
            for (size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) {
                    p = (int)j;
                    break;
                }
            if (p < 0) continue;
            CHECK(p > lastcol);
            CHECK(row[p] > 0);
            lastcol = p;
        }
    }
}

TEST_CASE("kernel lattice contains the published summand generators") {
    QMat m = to_qmat(IMat{{5, 0, -3, -2}, {0, 1, 2, -3}});
    IMat ker = kernel_lattice(m, 4);
    CHECK(ker.size() == 2);
    for (const IVec& k : ker) {
        CHECK(5 * k[0] - 3 * k[2] - 2 * k[3] == 0);
        CHECK(k[1] + 2 * k[2] - 3 * k[3] == 0);
    }
    // the published vectors generate the summand cone, not the full kernel
    // lattice (which is saturated and also contains (1,1,1,1)); they must
    // still be members
    for (const IVec& v : IMat{{13, 0, 15, 10}, {2, 15, 0, 5}, {1, 1, 1, 1}}) {
        IMat ext = ker;
        ext.push_back(v);
        CHECK(same_lattice(ker, ext, 4));
    }
}

TEST_CASE("kernel lattice of zero map is the full lattice") {
    IMat ker = kernel_lattice(IMat{{0, 0, 0}}, 3);
    CHECK(same_lattice(ker, IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
}

TEST_CASE("kernel lattice is saturated and annihilates the matrix") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        IMat m = random_imat(rng, 2, 5, 6);
        IMat ker = kernel_lattice(m, 5);
        for (const IVec& k : ker)
            for (const IVec& row : m) CHECK(dot(row, k) == 0);
        // saturation: rank(m) + |ker| = 5 and every rational kernel vector is
        // a rational combination of the basis (dimension count suffices)
        CHECK((int)ker.size() == 5 - rank(m));
        // doubling a kernel vector must not produce a finer lattice
        if (!ker.empty()) {
            IMat doubled = ker;
            for (Int& x : doubled[0]) x *= 2;
            CHECK(!same_lattice(ker, doubled, 5));
        }
    }
}

TEST_CASE("membership of the published kernel vectors") {
    // rank-2 kernel of the 2x4 matrix; both published vectors lie in it
    IMat m = {{5, 0, -3, -2}, {0, 1, 2, -3}};
    IMat ker = kernel_lattice(m, 4);
    CHECK(ker.size() == 2);
    for (const IVec& v : IMat{{13, 0, 15, 10}, {2, 15, 0, 5}}) {
        // v lies in the lattice iff adjoining it changes nothing
        IMat ext = ker;
        ext.push_back(v);
        CHECK(same_lattice(ker, ext, 4));
    }
}

TEST_CASE("primitive part") {
    CHECK(primitive_part({2, 4, 6}) == IVec{1, 2, 3});
    CHECK(primitive_part({0, 0, 1}) == IVec{0, 0, 1});
    CHECK(primitive_part({-6, 2, -1, 3}) == IVec{-6, 2, -1, 3});
    CHECK_THROWS_AS(primitive_part({0, 0, 0}), hypothesis_error);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        IVec v(4);
        for (Int& x : v) x = d(rng);
        if (is_zero(v)) continue;
        IVec p = primitive_part(v);
        CHECK(gcd_vec(p) == 1);
        IVec k = v;
        for (Int& x : k) x *= 3;
        CHECK(primitive_part(k) == p);
    }
}

TEST_CASE("solve_nonneg_integer basics") {
    IMat id = {{1, 0}, {0, 1}};
    auto x = solve_nonneg_integer(id, {3, 5}, 10);
    REQUIRE(x.has_value());
    CHECK(*x == IVec{3, 5});

    auto z = solve_nonneg_integer(id, {0, 0}, 10);
    REQUIRE(z.has_value());
    CHECK(*z == IVec{0, 0});

    // infeasible
    CHECK(!solve_nonneg_integer(id, {-1, 0}, 10).has_value());
    // bound too small
    CHECK(!solve_nonneg_integer(id, {3, 5}, 7).has_value());
}

TEST_CASE("solve_nonneg_integer agrees with exhaustive enumeration") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        IMat a = random_imat(rng, 2, 3, 3);
        IVec b(2);
        for (Int& x : b) x = d(rng);
        const int bound = 6;
        auto mine = solve_nonneg_integer(a, b, bound);
        // exhaustive lexicographic scan
        std::optional<IVec> expect;
        for (int x0 = 0; x0 <= bound && !expect; ++x0)
            for (int x1 = 0; x0 + x1 <= bound && !expect; ++x1)
                for (int x2 = 0; x0 + x1 + x2 <= bound && !expect; ++x2) {
                    IVec x = {x0, x1, x2};
                    IVec r = b;
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 3; ++j) r[i] -= a[i][j] * x[j];
                    if (is_zero(r)) expect = x;
                }
        CHECK(mine == expect);
    }
}
