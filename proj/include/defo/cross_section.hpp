#pragma once

#include "defo/cone.hpp"

namespace defo {

// The polyhedron Q = sigma cap [R=1] with its combinatorial decorations.
//
// Points live in coordinates relative to a fixed basis of the direction
// lattice ker(R) cap N and the chosen origin vertex (the lexicographically
// smallest lattice vertex, translated to 0).  Cross-section covectors c are
// integer vectors in the dual basis; the pairing with a point x is the plain
// dot product, and [c, z] corresponds to the element z*origin^* + c of M.

struct CSVertex {
    int ray = -1;     // index into cone.rays
    QVec point;       // coordinates in the section plane
    bool lattice = false;
};

struct CSEdge {
    int from = -1;  // vertex indices
    int to = -1;
    QVec dir;       // point(to) - point(from)
};

struct CSTwoFace {
    std::vector<int> rays;   // ray indices of the supporting 3-face
    std::vector<int> signs;  // entry per compact edge, in {0, +1, -1}
};

struct CrossSection {
    PointedCone cone;
    IVec r_covector;              // R in ambient M-coordinates
    IVec heights;                 // <a_i, R> per ray
    IMat plane_basis;             // rows: lattice basis of ker(R) cap N
    IVec origin_lattice_point;    // the ray vector chosen as origin (height 1)

    std::vector<CSVertex> vertices;  // boundary order for 2-d sections
    std::vector<IVec> tail_dirs;     // primitive tail directions, plane coords
    std::vector<int> tail_rays;      // matching ray indices
    std::vector<CSEdge> edges;
    std::vector<CSTwoFace> two_faces;

    std::vector<int> edge_component;  // edge -> component id
    int num_components = 0;
    bool bounded = false;

    int origin_vertex() const;  // index into vertices
    int num_edges() const { return (int)edges.size(); }

    // vertex adjacency through compact edges: (neighbor vertex, edge, +-1)
    struct Step {
        int vertex;
        int edge;
        int sign;  // +1 along the stored orientation
    };
    std::vector<std::vector<Step>> adjacency() const;

    // M = E^* x Z splitting: m -> (c, z)
    std::pair<IVec, Int> split_covector(const IVec& m) const;
    IVec unsplit_covector(const IVec& c, const Int& z) const;

    // collapse a per-edge vector to per-component sums
    QVec collapse(const QVec& per_edge) const;
};

CrossSection cross_section(const PointedCone& c, const IVec& r);

}  // namespace defo
