#pragma once

#include <optional>

#include "defo/hilbert.hpp"
#include "defo/minkowski.hpp"

namespace defo {

// Relation-space dimensions of the tangent and obstruction modules, plus the
// dimension-three companions.

struct ESets {
    std::vector<std::vector<int>> per_ray;  // per primal ray, indices into g.elements
    std::vector<int> boundary;              // elements on the boundary of the dual cone
    std::optional<int> level;               // k, when the graded variant is requested
};

ESets e_sets(const PointedCone& c, const IVec& r, const GeneratorSet& g,
             std::optional<int> k = std::nullopt);

// (dim V(Q) - 1, relation-space dimension); both computations must agree
std::pair<int, int> t1_dimension(const PointedCone& c, const IVec& r, const GeneratorSet& g);

// the Kodaira-Spencer pairing Phi(t, q) = sum_nu q_nu <t, eta*(c^nu)>;
// the relation q is indexed by positions in g.elements
Rat ks_pairing(const SummandSpace& s, const GeneratorSet& g, const QVec& t, const QVec& relation);

int t2_dimension(const PointedCone& c, const IVec& r, const GeneratorSet& g, int k);

struct GorensteinCompanion {
    PointedCone companion;
    int dim_v = 0;
    int dim_v_companion = 0;
};

GorensteinCompanion gorenstein_companion(const PointedCone& c, const IVec& r);

// all primitive degrees R with dim(V(Q(R))/1) > 0, for 3-dimensional cones
// that are smooth in codimension two
std::vector<IVec> interesting_degrees(const PointedCone& c);

}  // namespace defo
