#pragma once

#include "defo/lattice.hpp"
#include "defo/rational.hpp"

namespace defo {

// Extreme rays and lineality space of {x in R^dim : h x >= 0 for h in ineqs}.
// Rays are primitive and lex-sorted; the lineality basis is in HNF.
struct DDResult {
    IMat rays;
    IMat lineality;
};

DDResult rays_from_inequalities(const IMat& ineqs, int dim);

// A pointed rational polyhedral cone carrying both descriptions.
// rays: primitive extreme generators (lex-sorted).
// facets: primitive supporting covectors, irredundant modulo the span.
// equations: HNF basis of span(cone)^perp; empty iff the cone is full-dimensional.
struct PointedCone {
    int dim = 0;
    IMat rays;
    IMat facets;
    IMat equations;
    bool smooth2faces = false;

    static PointedCone from_rays(IMat generators, int dim);

    bool full_dimensional() const { return equations.empty(); }
    bool contains(const IVec& x) const;
    bool interior_contains(const IVec& x) const;
};

// dual cone; input must be full-dimensional so the dual stays pointed
PointedCone dual_cone(const PointedCone& c);

// all faces of the given dimension, each as a sorted list of ray indices
std::vector<std::vector<int>> faces(const PointedCone& c, int face_dim);

// every 2-face spanned by part of a lattice basis
bool check_codim2_smooth(const PointedCone& c);

}  // namespace defo
