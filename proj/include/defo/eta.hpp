#pragma once

#include "defo/minkowski.hpp"

namespace defo {

// Support data and the eta functionals on V^*.
//
// v(c) and the canonical path to it are produced together by a depth-first
// descent from the origin along edges that strictly decrease <., c>,
// exploring neighbors in vertex order.  Minimizing vertices can be non-unique
// (the minimizing face may be an edge); the descent picks a canonical one and
// every derived quantity is well defined on the level of V^*.

struct SupportDatum {
    IVec c;
    int vertex = -1;  // index of v(c)
    Rat eta0;
    Int eta0_star;
};

// an element of V^* stored through a collapsed representative
struct EtaFunctional {
    QVec coords;
};

struct EdgePath {
    IVec steps;  // net multiplicity per oriented edge
};

Rat component_sum(const EtaFunctional& e);

SupportDatum support_data(const CrossSection& q, const IVec& c);

// canonical (v(c), path from the origin)
std::pair<int, EdgePath> descend_to_min(const CrossSection& q, const IVec& c);

// path from one vertex to another along which <., c> never increases;
// strictly decreasing paths are preferred
EdgePath monotone_path(const CrossSection& q, int from_v, int to_v, const IVec& c);

EtaFunctional eta(const SummandSpace& s, const IVec& c);
EtaFunctional eta_star(const SummandSpace& s, const IVec& c);

// the refined functional built from the fixed path to v(baseC) followed by a
// c-monotone path to v(c)
EtaFunctional eta_star_refined(const SummandSpace& s, const IVec& base_c, const IVec& c);

// partial order: a - b has a nonnegative integer representative
bool geq(const SummandSpace& s, const EtaFunctional& a, const EtaFunctional& b);

// membership of [c, eta] in the dual tautological cone / in Gamma
bool in_dual_tautological(const SummandSpace& s, const IVec& c, const EtaFunctional& e);
bool in_gamma(const SummandSpace& s, const IVec& c, const EtaFunctional& e);

// the tautological cone in A x V, coordinates (section plane, V-basis)
PointedCone tautological_cone(const SummandSpace& s);

// nonnegative integer representative of the class of e with the given total,
// if one exists
std::optional<IVec> nonneg_representative(const SummandSpace& s, const QVec& class_rep,
                                          const Int& total);

}  // namespace defo
