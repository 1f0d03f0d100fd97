#pragma once

#include <optional>

#include "defo/rational.hpp"

namespace defo {

// Integer lattice linear algebra.

struct HnfResult {
    IMat h;  // row-style Hermite normal form of the input
    IMat u;  // unimodular transform with u * m = h
};

// Row-style HNF: pivots positive, entries above a pivot reduced into
// [0, pivot), zero rows at the bottom.  det(u) = +-1.
HnfResult hermite_normal_form(const IMat& m);

// true iff h is its own Hermite normal form
bool is_hnf(const IMat& h);

// Z-basis (HNF rows) of the saturated lattice {x in Z^cols : m x = 0}.
IMat kernel_lattice(const QMat& m, int cols);
IMat kernel_lattice(const IMat& m, int cols);

// v / gcd(v); throws on the zero vector
IVec primitive_part(const IVec& v);

// Some x in Z^cols with a x = b, when one exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// Lexicographically smallest x in N^cols with a x = b and sum(x) <= bound.
// pos_row, when nonempty, must be a covector strictly positive on every
// column of a; it is used to cap the search per variable.
std::optional<IVec> solve_nonneg_integer(const IMat& a, const IVec& b, const Int& bound,
                                         const IVec& pos_row = {});

// lattice equality via HNF of the spanning rows
bool same_lattice(const IMat& a, const IMat& b, int cols);

}  // namespace defo
