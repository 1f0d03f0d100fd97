#include "defo/eta.hpp"

#include <algorithm>
#include <functional>

#include "defo/linalg.hpp"

namespace defo {

namespace {

QVec vertex_values(const CrossSection& q, const IVec& c) {
    QVec vals(q.vertices.size());
    for (size_t v = 0; v < q.vertices.size(); ++v) vals[v] = dot(q.vertices[v].point, to_qvec(c));
    return vals;
}

void check_bounded_below(const CrossSection& q, const IVec& c) {
    if ((int)c.size() != (int)q.plane_basis.size()) throw input_error("covector has wrong dimension");
    for (const IVec& t : q.tail_dirs)
        if (dot(t, c) < 0) throw hypothesis_error("unbounded below: c is negative on a tail ray");
}

// depth-first search along monotone edges; returns parent links
struct Descent {
    std::vector<int> parent_vertex;
    std::vector<int> parent_edge;
    std::vector<int> parent_sign;
    std::vector<char> visited;
};

// explores from `start`; stop(v) == true ends the search at v
int dfs_descend(const CrossSection& q, const QVec& vals, int start, bool strict,
                const std::function<bool(int)>& stop, Descent& d) {
    auto adj = q.adjacency();
    const int nv = (int)q.vertices.size();
    d.parent_vertex.assign(nv, -1);
    d.parent_edge.assign(nv, -1);
    d.parent_sign.assign(nv, 0);
    d.visited.assign(nv, 0);
    std::function<int(int)> go = [&](int v) -> int {
        d.visited[v] = 1;
        if (stop(v)) return v;
        for (const auto& step : adj[v]) {
            if (d.visited[step.vertex]) continue;
            bool ok = strict ? vals[step.vertex] < vals[v] : vals[step.vertex] <= vals[v];
            if (!ok) continue;
            d.parent_vertex[step.vertex] = v;
            d.parent_edge[step.vertex] = step.edge;
            d.parent_sign[step.vertex] = step.sign;
            int r = go(step.vertex);
            if (r >= 0) return r;
        }
        return -1;
    };
    return go(start);
}

EdgePath path_from_links(const CrossSection& q, const Descent& d, int v) {
    EdgePath p;
    p.steps.assign(q.num_edges(), 0);
    while (d.parent_vertex[v] >= 0) {
        p.steps[d.parent_edge[v]] += d.parent_sign[v];
        v = d.parent_vertex[v];
    }
    return p;
}

QVec eta_per_edge(const CrossSection& q, const EdgePath& path, const IVec& c) {
    QVec out(q.num_edges(), Rat(0));
    for (int e = 0; e < q.num_edges(); ++e)
        if (path.steps[e] != 0) out[e] = -Rat(path.steps[e]) * dot(q.edges[e].dir, to_qvec(c));
    return out;
}

int component_of_vertex(const CrossSection& q, int v) {
    for (int e = 0; e < q.num_edges(); ++e)
        if (q.edges[e].from == v || q.edges[e].to == v) return q.edge_component[e];
    throw internal_error("vertex has no incident compact edge");
}

}  // namespace

Rat component_sum(const EtaFunctional& e) {
    Rat s = 0;
    for (const Rat& x : e.coords) s += x;
    return s;
}

std::pair<int, EdgePath> descend_to_min(const CrossSection& q, const IVec& c) {
    check_bounded_below(q, c);
    QVec vals = vertex_values(q, c);
    Rat minval = vals[0];
    for (const Rat& v : vals) minval = std::min(minval, v);
    Descent d;
    int found = dfs_descend(q, vals, q.origin_vertex(), /*strict=*/true,
                            [&](int v) { return vals[v] == minval; }, d);
    if (found < 0) throw internal_error("strict descent failed to reach a minimizing vertex");
    return {found, path_from_links(q, d, found)};
}

SupportDatum support_data(const CrossSection& q, const IVec& c) {
    auto [v, path] = descend_to_min(q, c);
    SupportDatum sd;
    sd.c = c;
    sd.vertex = v;
    sd.eta0 = -dot(q.vertices[v].point, to_qvec(c));
    sd.eta0_star = ceil_rat(sd.eta0);
    return sd;
}

EdgePath monotone_path(const CrossSection& q, int from_v, int to_v, const IVec& c) {
    check_bounded_below(q, c);
    QVec vals = vertex_values(q, c);
    Descent d;
    auto stop = [&](int v) { return v == to_v; };
    int found = dfs_descend(q, vals, from_v, /*strict=*/true, stop, d);
    if (found < 0) found = dfs_descend(q, vals, from_v, /*strict=*/false, stop, d);
    if (found < 0) throw hypothesis_error("no monotone path between the vertices");
    return path_from_links(q, d, found);
}

EtaFunctional eta(const SummandSpace& s, const IVec& c) {
    auto [v, path] = descend_to_min(s.cross, c);
    return {s.cross.collapse(eta_per_edge(s.cross, path, c))};
}

EtaFunctional eta_star(const SummandSpace& s, const IVec& c) {
    auto [v, path] = descend_to_min(s.cross, c);
    EtaFunctional e{s.cross.collapse(eta_per_edge(s.cross, path, c))};
    SupportDatum sd = support_data(s.cross, c);
    Rat defect = Rat(sd.eta0_star) - sd.eta0;
    if (defect != 0) e.coords[component_of_vertex(s.cross, v)] += defect;
    return e;
}

EtaFunctional eta_star_refined(const SummandSpace& s, const IVec& base_c, const IVec& c) {
    const CrossSection& q = s.cross;
    check_bounded_below(q, c);
    auto [vb, base_path] = descend_to_min(q, base_c);
    // fixed path 0 -> v(baseC): reuse the canonical descent path for baseC,
    // then a c-monotone continuation to v(c)
    auto [vc, ignore] = descend_to_min(q, c);
    EdgePath mu = monotone_path(q, vb, vc, c);
    EdgePath total;
    total.steps.assign(q.num_edges(), 0);
    for (int e = 0; e < q.num_edges(); ++e) total.steps[e] = base_path.steps[e] + mu.steps[e];
    EtaFunctional out{q.collapse(eta_per_edge(q, total, c))};
    SupportDatum sd = support_data(q, c);
    Rat defect = Rat(sd.eta0_star) - sd.eta0;
    if (defect != 0) out.coords[component_of_vertex(q, vc)] += defect;
    return out;
}

std::optional<IVec> nonneg_representative(const SummandSpace& s, const QVec& class_rep,
                                          const Int& total) {
    if (total < 0) return std::nullopt;
    const int m = s.num_vars;
    // enumerate exponent vectors with the forced component sum
    std::vector<int> cur(m, 0);
    std::optional<IVec> best;
    std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
        if (pos == m - 1) {
            cur[pos] = left;
            QVec cand(m);
            for (int i = 0; i < m; ++i) cand[i] = cur[i];
            if (s.same_functional(cand, class_rep)) {
                IVec out(m);
                for (int i = 0; i < m; ++i) out[i] = cur[i];
                best = out;
                return true;
            }
            return false;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            if (rec(pos + 1, left - e)) return true;
        }
        return false;
    };
    if (m == 0) return total == 0 ? std::optional<IVec>(IVec{}) : std::nullopt;
    long tot = total.get_si();
    rec(0, (int)tot);
    return best;
}

bool geq(const SummandSpace& s, const EtaFunctional& a, const EtaFunctional& b) {
    QVec diff = sub(a.coords, b.coords);
    Rat total = 0;
    for (const Rat& x : diff) total += x;
    if (!is_integer(total) || total < 0) return false;
    return nonneg_representative(s, diff, total.get_num()).has_value();
}

bool in_dual_tautological(const SummandSpace& s, const IVec& c, const EtaFunctional& e) {
    QVec diff = sub(e.coords, eta(s, c).coords);
    for (const IVec& ray : s.c_rays)
        if (dot(to_qvec(ray), diff) < 0) return false;
    return true;
}

bool in_gamma(const SummandSpace& s, const IVec& c, const EtaFunctional& e) {
    QVec diff = sub(e.coords, eta_star(s, c).coords);
    for (const IVec& ray : s.c_rays)
        if (dot(to_qvec(ray), diff) < 0) return false;
    return true;
}

PointedCone tautological_cone(const SummandSpace& s) {
    const CrossSection& q = s.cross;
    const int plane_dim = (int)q.plane_basis.size();
    const int dv = s.dim_v();
    // coordinates of t in the V-basis
    QMat vmat(s.num_vars, QVec(dv));
    for (int i = 0; i < s.num_vars; ++i)
        for (int j = 0; j < dv; ++j) vmat[i][j] = s.v_basis[j][i];
    IMat gens;
    for (const IVec& ray : s.c_rays) {
        auto y = solve(vmat, to_qvec(ray));
        if (!y) throw internal_error("summand ray is not in V");
        SummandPolytope p = summand_polytope(s, to_qvec(ray));
        for (const QVec& pt : p.vertex_points) {
            QVec g = pt;
            g.insert(g.end(), y->begin(), y->end());
            gens.push_back(primitive_of(g));
        }
    }
    for (const IVec& t : q.tail_dirs) {
        QVec g = to_qvec(t);
        for (int j = 0; j < dv; ++j) g.push_back(Rat(0));
        gens.push_back(primitive_of(g));
    }
    return PointedCone::from_rays(gens, plane_dim + dv);
}

}  // namespace defo
