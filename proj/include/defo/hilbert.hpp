#pragma once

#include "defo/cross_section.hpp"
#include "defo/eta.hpp"

namespace defo {

// Minimal generating set of the semigroup of lattice points of the dual cone,
// decorated by the splitting M = E^* x Z once a cross-section is fixed.

struct Decoration {
    IVec c;       // plane-dual coordinates (empty before decoration)
    Int z = 0;    // last coordinate; equals eta0*(c) for non-distinguished elements
    bool is_r = false;
};

struct GeneratorSet {
    PointedCone dual;        // the cone whose lattice points are generated
    IMat elements;           // the Hilbert basis, canonical order
    bool decorated = false;
    int r_index = -1;
    std::vector<Decoration> decorations;

    // indices of the non-distinguished elements, in order (the z-variables)
    std::vector<int> z_elements() const;
};

// Hilbert basis of (dual of c) cap M; c must be full-dimensional so the dual
// is pointed
GeneratorSet hilbert_basis(const PointedCone& c);

// split every element as [c, z] and verify z = eta0*(c); reorders canonically
// with the distinguished degree first.  A preferred order for the
// non-distinguished elements may be supplied (it must be a permutation of
// them); reports and variable numbering follow it.
GeneratorSet e_decorate(GeneratorSet g, const SummandSpace& s, const IMat& preferred_zorder = {});

// strictly positive functional on the dual cone (sum of the primal rays)
IVec positive_functional(const PointedCone& primal);

}  // namespace defo
