#include "defo/lattice.hpp"

#include <algorithm>

#include "defo/linalg.hpp"

namespace defo {

namespace {

void add_row_multiple(IMat& m, IMat& u, int dst, int src, const Int& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
    for (size_t j = 0; j < u[dst].size(); ++j) u[dst][j] += f * u[src][j];
}

void negate_row(IMat& m, IMat& u, int i) {
    for (Int& x : m[i]) x = -x;
    for (Int& x : u[i]) x = -x;
}

}  // namespace

HnfResult hermite_normal_form(const IMat& m_in) {
    IMat m = m_in;
    const int rows = (int)m.size();
    const int cols = rows ? (int)m[0].size() : 0;
    IMat u(rows, IVec(rows, 0));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // reduce column c below row r to a single nonzero entry
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                if (best < 0 || cmp(abs(m[i][c]), abs(m[best][c])) < 0) best = i;
            }
            if (best < 0) break;
            for (int i = r; i < rows; ++i) {
                if (i == best || m[i][c] == 0) continue;
                Int q;
                // rounding towards zero gives euclidean descent
                mpz_tdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[best][c].get_mpz_t());
                add_row_multiple(m, u, i, best, -q);
            }
            bool others = false;
            for (int i = r; i < rows; ++i) {
                if (i != best && m[i][c] != 0) {
                    others = true;
                    break;
                }
            }
            if (!others) {
                std::swap(m[r], m[best]);
                std::swap(u[r], u[best]);
                break;
            }
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0) negate_row(m, u, r);
        // bring entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0) add_row_multiple(m, u, i, r, -q);
        }
        ++r;
    }
    return {m, u};
}

bool is_hnf(const IMat& h) {
    HnfResult again = hermite_normal_form(h);
    return again.h == h;
}

IMat kernel_lattice(const QMat& m, int cols) {
    // scale rows to integers; the kernel is unchanged
    IMat a;
    for (const QVec& row : m) {
        if ((int)row.size() != cols) throw internal_error("kernel_lattice: ragged matrix");
        IVec r = primitive_of(row);
        if (!is_zero(r)) a.push_back(r);
    }
    // rows of u mapping transpose(a) to zero rows form the kernel
    IMat b(cols, IVec(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < cols; ++j) b[j][i] = a[i][j];
    HnfResult hr = hermite_normal_form(b);
    IMat ker;
    for (int i = 0; i < cols; ++i) {
        if (is_zero(hr.h[i])) ker.push_back(hr.u[i]);
    }
    return hermite_normal_form(ker).h;
}

IMat kernel_lattice(const IMat& m, int cols) { return kernel_lattice(to_qmat(m), cols); }

IVec primitive_part(const IVec& v) {
    Int g = gcd_vec(v);
    if (g == 0) throw hypothesis_error("zero vector has no primitive part");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    if ((int)b.size() != rows) throw internal_error("solve_integer: size mismatch");
    // substitute x = u^T y and solve the echelon system h^T y = b
    IMat at(cols, IVec(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) at[j][i] = a[i][j];
    HnfResult hr = hermite_normal_form(at);
    IVec residual = b;
    IVec y(cols, 0);
    for (int j = 0; j < cols; ++j) {
        int pivot = -1;
        for (int i = 0; i < rows; ++i)
            if (hr.h[j][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[pivot].get_mpz_t(),
                    hr.h[j][pivot].get_mpz_t());
        if (rem != 0) return std::nullopt;
        y[j] = q;
        for (int i = 0; i < rows; ++i) residual[i] -= q * hr.h[j][i];
    }
    if (!is_zero(residual)) return std::nullopt;
    IVec x(cols, 0);
    for (int j = 0; j < cols; ++j)
        for (int k = 0; k < cols; ++k) x[j] += hr.u[k][j] * y[k];
    return x;
}

namespace {

bool solve_nonneg_rec(const IMat& a, IVec& residual, const Int& budget, const IVec& pos_row,
                      const QVec& pos_cols, size_t col, IVec& x) {
    const size_t cols = x.size();
    if (col == cols) return is_zero(residual);
    // cap from the positive functional, when available
    Int cap = budget;
    if (!pos_row.empty()) {
        Rat rem = 0;
        for (size_t i = 0; i < residual.size(); ++i) rem += Rat(pos_row[i]) * Rat(residual[i]);
        if (rem < 0) return false;
        Rat c = rem / pos_cols[col];
        Int fc = floor_rat(c);
        if (fc < cap) cap = fc;
    }
    for (Int v = 0; v <= cap; ++v) {
        x[col] = v;
        if (v > 0)
            for (size_t i = 0; i < residual.size(); ++i) residual[i] -= a[i][col];
        if (solve_nonneg_rec(a, residual, budget - v, pos_row, pos_cols, col + 1, x)) return true;
    }
    // undo the accumulated subtraction of cap * column
    for (size_t i = 0; i < residual.size(); ++i) residual[i] += cap * a[i][col];
    x[col] = 0;
    return false;
}

}  // namespace

std::optional<IVec> solve_nonneg_integer(const IMat& a, const IVec& b, const Int& bound,
                                         const IVec& pos_row) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw internal_error("solve_nonneg_integer: size mismatch");
    QVec pos_cols(cols, Rat(1));
    if (!pos_row.empty()) {
        for (size_t c = 0; c < cols; ++c) {
            Rat s = 0;
            for (size_t i = 0; i < rows; ++i) s += Rat(pos_row[i]) * Rat(a[i][c]);
            if (s <= 0) throw internal_error("solve_nonneg_integer: functional not positive");
            pos_cols[c] = s;
        }
    }
    IVec x(cols, 0), residual = b;
    if (solve_nonneg_rec(a, residual, bound, pos_row, pos_cols, 0, x)) return x;
    return std::nullopt;
}

namespace {

IMat hnf_nonzero_rows(const IMat& m) {
    IMat h = hermite_normal_form(m).h;
    IMat out;
    for (const IVec& r : h)
        if (!is_zero(r)) out.push_back(r);
    return out;
}

}  // namespace

bool same_lattice(const IMat& a, const IMat& b, int cols) {
    (void)cols;
    return hnf_nonzero_rows(a) == hnf_nonzero_rows(b);
}

}  // namespace defo
