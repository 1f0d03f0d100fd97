#include "defo/linalg.hpp"

#include <sstream>

namespace defo {

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = (int)m.size();
    const int cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return (int)rref(m).size(); }

int rank(const IMat& m) { return rank(to_qmat(m)); }

QMat kernel_basis(QMat m, int cols) {
    if (m.empty()) {
        QMat basis;
        for (int c = 0; c < cols; ++c) {
            QVec e(cols, Rat(0));
            e[c] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(v);
    }
    return basis;
}

std::optional<QVec> solve(QMat a, QVec b) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IVec primitive_of(const QVec& v) {
    Int den = 1;
    for (const Rat& q : v) den = lcm(den, q.get_den());
    IVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (den / v[i].get_den());
        g = gcd(g, w[i]);
    }
    if (g == 0) return w;
    for (Int& x : w) x /= g;
    return w;
}

}  // namespace defo
