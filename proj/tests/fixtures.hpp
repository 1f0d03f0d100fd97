#pragma once

// The two cones used throughout the worked examples.

#include "defo/cone.hpp"
#include "defo/cross_section.hpp"

namespace fixtures {

using namespace defo;

// hexagonal Q with vertices (0,0),(1,0),(2,1),(1,2),(1/2,2),(0,1/2)
inline PointedCone hexagon_cone() {
    return PointedCone::from_rays(
        {{0, 0, 1}, {1, 0, 1}, {2, 1, 1}, {1, 2, 1}, {1, 4, 2}, {0, 1, 2}}, 3);
}

// heptagonal Q whose semigroup Gamma is strictly smaller than the saturation
inline PointedCone heptagon_cone() {
    return PointedCone::from_rays(
        {{0, 0, 1}, {6, -1, 2}, {5, 0, 1}, {5, 1, 1}, {24, 7, 5}, {6, 5, 2}, {2, 3, 1}}, 3);
}

inline IVec height_degree() { return {0, 0, 1}; }

inline CrossSection hexagon_q() { return cross_section(hexagon_cone(), height_degree()); }
inline CrossSection heptagon_q() { return cross_section(heptagon_cone(), height_degree()); }

// cone over the unit square at height one
inline PointedCone square_cone() {
    return PointedCone::from_rays({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3);
}

inline QVec qvec(std::initializer_list<Rat> xs) { return QVec(xs); }

}  // namespace fixtures
