#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "defo/errors.hpp"

namespace defo {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_vec(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw internal_error("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw internal_error("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec to_qvec(const IVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

inline QMat to_qmat(const IMat& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) q[i] = to_qvec(m[i]);
    return q;
}

inline IVec neg(const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw internal_error("add: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw internal_error("sub: size mismatch");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec scale(const Rat& s, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// strict lexicographic order on vectors of equal length
inline bool lex_less(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string to_string(const Rat& q);
std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

}  // namespace defo
