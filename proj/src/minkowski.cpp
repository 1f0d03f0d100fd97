#include "defo/minkowski.hpp"

#include <algorithm>

#include "defo/linalg.hpp"

namespace defo {

bool SummandSpace::in_v(const QVec& t) const {
    for (const QVec& row : two_face_matrix)
        if (dot(row, t) != 0) return false;
    return true;
}

bool SummandSpace::in_summand_cone(const QVec& t) const {
    if (!in_v(t)) return false;
    for (const Rat& x : t)
        if (x < 0) return false;
    return true;
}

Rat SummandSpace::pair(const QVec& t, const QVec& eta) const { return dot(t, eta); }

bool SummandSpace::same_functional(const QVec& a, const QVec& b) const {
    QVec d = sub(a, b);
    for (const QVec& v : v_basis)
        if (dot(v, d) != 0) return false;
    return true;
}

SummandSpace summand_space(const CrossSection& q) {
    SummandSpace s;
    s.cross = q;
    s.num_edges = q.num_edges();
    s.num_vars = q.num_components;
    s.collapse = q.edge_component;

    const int plane_dim = (int)q.plane_basis.size();
    for (const CSTwoFace& tf : q.two_faces) {
        for (int coord = 0; coord < plane_dim; ++coord) {
            QVec row(s.num_vars, Rat(0));
            for (int e = 0; e < s.num_edges; ++e)
                if (tf.signs[e] != 0) row[s.collapse[e]] += Rat(tf.signs[e]) * q.edges[e].dir[coord];
            if (!is_zero(row)) s.two_face_matrix.push_back(row);
        }
    }

    s.v_basis = kernel_basis(s.two_face_matrix, s.num_vars);
    s.vperp_lattice = kernel_lattice(s.v_basis, s.num_vars);

    // extreme rays of V cap R^m_{>=0}
    IMat ineqs;
    for (const QVec& row : s.two_face_matrix) {
        IVec r = primitive_of(row);
        ineqs.push_back(r);
        ineqs.push_back(neg(r));
    }
    for (int i = 0; i < s.num_vars; ++i) {
        IVec e(s.num_vars, 0);
        e[i] = 1;
        ineqs.push_back(e);
    }
    DDResult dd = rays_from_inequalities(ineqs, s.num_vars);
    if (!dd.lineality.empty()) throw internal_error("summand cone has lineality");
    s.c_rays = dd.rays;
    return s;
}

SummandPolytope summand_polytope(const SummandSpace& s, const QVec& t) {
    if ((int)t.size() != s.num_vars) throw input_error("summand parameter has wrong size");
    for (const Rat& x : t)
        if (x < 0) throw hypothesis_error("summand parameter has a negative entry");
    if (!s.in_v(t)) throw hypothesis_error("not a summand parameter: closing equations fail");

    const CrossSection& q = s.cross;
    SummandPolytope p;
    p.tail = q.tail_dirs;
    p.vertex_points.assign(q.vertices.size(), QVec());

    // walk the compact 1-skeleton from the origin; the closing equations make
    // the result path-independent
    auto adj = q.adjacency();
    const int plane_dim = (int)q.plane_basis.size();
    std::vector<int> stack = {q.origin_vertex()};
    p.vertex_points[q.origin_vertex()] = QVec(plane_dim, Rat(0));
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& step : adj[v]) {
            if (!p.vertex_points[step.vertex].empty()) continue;
            QVec d = scale(Rat(step.sign) * t[s.collapse[step.edge]], q.edges[step.edge].dir);
            p.vertex_points[step.vertex] = add(p.vertex_points[v], d);
            stack.push_back(step.vertex);
        }
    }
    for (const QVec& pt : p.vertex_points)
        if (pt.empty()) throw internal_error("compact 1-skeleton is not connected");
    return p;
}

SummandPolytope minkowski_sum(const SummandPolytope& a, const SummandPolytope& b) {
    if (a.tail != b.tail) throw hypothesis_error("summands have different tail cones");
    if (a.vertex_points.size() != b.vertex_points.size())
        throw input_error("summands come from different cross-sections");
    SummandPolytope out;
    out.tail = a.tail;
    out.vertex_points.resize(a.vertex_points.size());
    for (size_t i = 0; i < a.vertex_points.size(); ++i)
        out.vertex_points[i] = add(a.vertex_points[i], b.vertex_points[i]);
    return out;
}

}  // namespace defo
