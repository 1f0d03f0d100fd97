#pragma once

#include <optional>

#include "defo/rational.hpp"

namespace defo {

// Exact rational linear algebra on dense row-major matrices.

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMat& m);

int rank(QMat m);
int rank(const IMat& m);

// Canonical basis of {x : m x = 0}: one vector per free column of the rref,
// with the free coordinate set to 1 and pivot coordinates solved.
QMat kernel_basis(QMat m, int cols);

// Some solution of a x = b, if the system is consistent.
std::optional<QVec> solve(QMat a, QVec b);

QVec mat_vec(const QMat& m, const QVec& v);

// Clears denominators and divides by the content; zero maps to zero.
IVec primitive_of(const QVec& v);

}  // namespace defo
