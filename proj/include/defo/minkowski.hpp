#pragma once

#include "defo/cross_section.hpp"

namespace defo {

// V(Q), the Minkowski summand cone C(Q), and summand reconstruction.
// Everything lives in collapsed coordinates: one coordinate per edge
// component of Q.

struct SummandSpace {
    CrossSection cross;
    int num_edges = 0;
    int num_vars = 0;              // number of components m
    std::vector<int> collapse;     // edge -> component
    QMat two_face_matrix;          // closing equations, collapsed variables
    QMat v_basis;                  // basis of V(Q) in Q^m
    IMat c_rays;                   // primitive extreme rays of C(Q)
    IMat vperp_lattice;            // HNF basis of V^perp cap Z^m

    int dim_v() const { return (int)v_basis.size(); }
    QVec all_ones() const { return QVec(num_vars, Rat(1)); }

    bool in_v(const QVec& t) const;        // satisfies all closing equations
    bool in_summand_cone(const QVec& t) const;  // in V and componentwise >= 0

    // evaluation of a V^*-representative against a V-vector
    Rat pair(const QVec& t, const QVec& eta) const;

    // two representatives give the same element of V^* iff their difference
    // kills every basis vector of V
    bool same_functional(const QVec& a, const QVec& b) const;
};

struct SummandPolytope {
    std::vector<QVec> vertex_points;  // per vertex index of Q
    std::vector<IVec> tail;           // shared tail directions
};

SummandSpace summand_space(const CrossSection& q);

SummandPolytope summand_polytope(const SummandSpace& s, const QVec& t);

SummandPolytope minkowski_sum(const SummandPolytope& a, const SummandPolytope& b);

}  // namespace defo
