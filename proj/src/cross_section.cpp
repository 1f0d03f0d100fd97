#include "defo/cross_section.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "defo/linalg.hpp"

namespace defo {

namespace {

// plane coordinates of an ambient point relative to base, in the given basis
QVec plane_coords(const IMat& basis, const QVec& ambient_offset) {
    const int n = (int)ambient_offset.size();
    const int k = (int)basis.size();
    QMat a(n, QVec(k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = Rat(basis[j][i]);
    auto x = solve(a, ambient_offset);
    if (!x) throw internal_error("point does not lie in the section plane");
    return *x;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Rat cross2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

int CrossSection::origin_vertex() const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (is_zero(vertices[i].point)) return (int)i;
    throw internal_error("origin vertex missing");
}

std::vector<std::vector<CrossSection::Step>> CrossSection::adjacency() const {
    std::vector<std::vector<Step>> adj(vertices.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].from].push_back({edges[e].to, (int)e, +1});
        adj[edges[e].to].push_back({edges[e].from, (int)e, -1});
    }
    // deterministic neighbor order
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [](const Step& a, const Step& b) { return a.vertex < b.vertex; });
    return adj;
}

std::pair<IVec, Int> CrossSection::split_covector(const IVec& m) const {
    IVec c(plane_basis.size());
    for (size_t i = 0; i < plane_basis.size(); ++i) c[i] = dot(plane_basis[i], m);
    return {c, dot(origin_lattice_point, m)};
}

IVec CrossSection::unsplit_covector(const IVec& c, const Int& z) const {
    const int n = (int)r_covector.size();
    QMat a;
    QVec rhs;
    for (size_t i = 0; i < plane_basis.size(); ++i) {
        a.push_back(to_qvec(plane_basis[i]));
        rhs.push_back(Rat(c[i]));
    }
    a.push_back(to_qvec(origin_lattice_point));
    rhs.push_back(Rat(z));
    auto x = solve(a, rhs);
    if (!x) throw internal_error("covector splitting is not invertible");
    IVec m(n);
    for (int i = 0; i < n; ++i) {
        if (!is_integer((*x)[i])) throw internal_error("unsplit covector is not integral");
        m[i] = (*x)[i].get_num();
    }
    return m;
}

QVec CrossSection::collapse(const QVec& per_edge) const {
    QVec out(num_components, Rat(0));
    for (size_t e = 0; e < per_edge.size(); ++e) out[edge_component[e]] += per_edge[e];
    return out;
}

CrossSection cross_section(const PointedCone& c, const IVec& r) {
    if (!c.full_dimensional()) throw hypothesis_error("cone must be full-dimensional");
    const int n = c.dim;
    if ((int)r.size() != n) throw input_error("R has wrong dimension");
    if (is_zero(r)) throw hypothesis_error("R must be nonzero");
    if (gcd_vec(r) != 1) throw hypothesis_error("R is not primitive");

    CrossSection q;
    q.cone = c;
    q.r_covector = r;
    q.heights.resize(c.rays.size());
    for (size_t i = 0; i < c.rays.size(); ++i) {
        q.heights[i] = dot(c.rays[i], r);
        if (q.heights[i] < 0) throw hypothesis_error("R is negative on a ray: R is not in the dual cone");
    }

    q.plane_basis = kernel_lattice(IMat{r}, n);

    // origin: lexicographically smallest lattice vertex
    int origin_ray = -1;
    for (size_t i = 0; i < c.rays.size(); ++i) {
        if (q.heights[i] != 1) continue;
        if (origin_ray < 0 || lex_less(c.rays[i], c.rays[origin_ray])) origin_ray = (int)i;
    }
    if (origin_ray < 0) throw hypothesis_error("rigid in degree -R: Q has no lattice vertex");
    q.origin_lattice_point = c.rays[origin_ray];

    // vertex points and tail directions in plane coordinates
    std::vector<int> vertex_rays;
    std::map<int, QVec> point_of_ray;
    for (size_t i = 0; i < c.rays.size(); ++i) {
        if (q.heights[i] == 0) {
            QVec coords = plane_coords(q.plane_basis, to_qvec(c.rays[i]));
            IVec d(coords.size());
            for (size_t j = 0; j < coords.size(); ++j) {
                if (!is_integer(coords[j]))
                    throw internal_error("tail ray is not integral in the plane lattice");
                d[j] = coords[j].get_num();
            }
            q.tail_dirs.push_back(d);
            q.tail_rays.push_back((int)i);
        } else {
            QVec p(n);
            for (int j = 0; j < n; ++j)
                p[j] = Rat(c.rays[i][j]) / Rat(q.heights[i]) - Rat(q.origin_lattice_point[j]);
            point_of_ray[(int)i] = plane_coords(q.plane_basis, p);
            vertex_rays.push_back((int)i);
        }
    }

    // compact edges of Q = 2-faces of sigma with two vertex rays
    std::vector<std::pair<int, int>> compact_pairs;
    for (const auto& f : faces(c, 2)) {
        if (f.size() != 2) throw internal_error("2-face with unexpected ray count");
        if (q.heights[f[0]] >= 1 && q.heights[f[1]] >= 1) compact_pairs.push_back({f[0], f[1]});
    }

    // vertex order; planar sections follow the boundary counterclockwise
    std::vector<int> order;
    const int plane_dim = n - 1;
    if (vertex_rays.size() <= 1) {
        order = vertex_rays;
    } else if (plane_dim == 2 && !compact_pairs.empty()) {
        std::map<int, std::vector<int>> nbr;
        for (auto& [a, b] : compact_pairs) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        for (auto& [v, ns] : nbr) std::sort(ns.begin(), ns.end());
        const bool cycle = compact_pairs.size() == vertex_rays.size();
        int start;
        if (cycle) {
            start = origin_ray;
        } else {
            std::vector<int> ends;
            for (int v : vertex_rays)
                if (nbr[v].size() <= 1) ends.push_back(v);
            if (ends.empty()) throw internal_error("unbounded section without path ends");
            start = ends[0];
            for (int e : ends)
                if (lex_less(point_of_ray[e], point_of_ray[start])) start = e;
        }
        int prev = -1, cur = start;
        while ((int)order.size() < (int)vertex_rays.size()) {
            order.push_back(cur);
            int next = -1;
            for (int cand : nbr[cur]) {
                if (cand != prev) {
                    next = cand;
                    break;
                }
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            if (cycle && cur == start) break;
        }
        if (order.size() != vertex_rays.size()) throw internal_error("compact 1-skeleton is not connected");
        if (cycle) {
            Rat area = 0;
            for (size_t i = 0; i < order.size(); ++i)
                area += cross2(point_of_ray[order[i]], point_of_ray[order[(i + 1) % order.size()]]);
            if (area < 0) std::reverse(order.begin() + 1, order.end());
        }
    } else {
        order = vertex_rays;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return lex_less(point_of_ray[a], point_of_ray[b]); });
    }

    std::map<int, int> vertex_index;
    for (size_t i = 0; i < order.size(); ++i) {
        CSVertex v;
        v.ray = order[i];
        v.point = point_of_ray[order[i]];
        v.lattice = true;
        for (const Rat& x : v.point)
            if (!is_integer(x)) v.lattice = false;
        q.vertices.push_back(v);
        vertex_index[order[i]] = (int)i;
    }

    auto add_edge = [&](int vi, int vj) {
        CSEdge e;
        e.from = vi;
        e.to = vj;
        e.dir = sub(q.vertices[vj].point, q.vertices[vi].point);
        q.edges.push_back(e);
    };
    if (plane_dim == 2 && !compact_pairs.empty() && vertex_rays.size() >= 2) {
        const bool cycle = compact_pairs.size() == vertex_rays.size() && vertex_rays.size() >= 3;
        const size_t count = cycle ? order.size() : order.size() - 1;
        for (size_t i = 0; i < count; ++i) add_edge((int)i, (int)((i + 1) % order.size()));
    } else {
        std::vector<std::pair<int, int>> idx_pairs;
        for (auto& [a, b] : compact_pairs) {
            int i = vertex_index[a], j = vertex_index[b];
            idx_pairs.push_back({std::min(i, j), std::max(i, j)});
        }
        std::sort(idx_pairs.begin(), idx_pairs.end());
        for (auto& [i, j] : idx_pairs) add_edge(i, j);
    }

    // compact 2-faces of Q with their sign vectors
    q.bounded = q.tail_dirs.empty();
    for (const auto& f3 : faces(c, 3)) {
        bool compact = true;
        for (int ri : f3)
            if (q.heights[ri] == 0) compact = false;
        if (!compact) continue;
        CSTwoFace tf;
        tf.rays = f3;
        auto in_face = [&](int ray) { return std::find(f3.begin(), f3.end(), ray) != f3.end(); };
        std::vector<int> face_edges;
        for (size_t e = 0; e < q.edges.size(); ++e) {
            int ra = q.vertices[q.edges[e].from].ray;
            int rb = q.vertices[q.edges[e].to].ray;
            if (in_face(ra) && in_face(rb)) face_edges.push_back((int)e);
        }
        std::map<int, std::vector<std::pair<int, int>>> fadj;  // vertex -> (neighbor, edge)
        for (int e : face_edges) {
            fadj[q.edges[e].from].push_back({q.edges[e].to, e});
            fadj[q.edges[e].to].push_back({q.edges[e].from, e});
        }
        for (auto& [v, ns] : fadj) std::sort(ns.begin(), ns.end());
        if (fadj.empty()) continue;
        int start = fadj.begin()->first;
        std::vector<int> vcycle;
        std::vector<std::pair<int, int>> ecycle;  // (edge index, traversal sign)
        int prev = -1, cur = start;
        do {
            vcycle.push_back(cur);
            int next = -1, via = -1;
            for (auto& [cand, e] : fadj[cur]) {
                if (cand != prev) {
                    next = cand;
                    via = e;
                    break;
                }
            }
            if (next < 0) break;
            ecycle.push_back({via, q.edges[via].from == cur ? +1 : -1});
            prev = cur;
            cur = next;
        } while (cur != start && vcycle.size() <= q.edges.size() + 1);
        if (ecycle.size() != face_edges.size() || cur != start)
            throw internal_error("compact 2-face boundary is not a simple cycle");

        // orientation: counterclockwise in the frame of the first two cycle edges
        QVec u1 = q.edges[ecycle[0].first].dir;
        if (ecycle[0].second < 0) u1 = scale(Rat(-1), u1);
        QVec u2raw = q.edges[ecycle[1].first].dir;
        if (ecycle[1].second < 0) u2raw = scale(Rat(-1), u2raw);
        QVec u2 = sub(u2raw, scale(dot(u2raw, u1) / dot(u1, u1), u1));
        std::vector<QVec> pts;
        for (int v : vcycle) {
            const QVec& p = q.vertices[v].point;
            pts.push_back({dot(p, u1), dot(p, u2)});
        }
        Rat area = 0;
        for (size_t i = 0; i < pts.size(); ++i) area += cross2(pts[i], pts[(i + 1) % pts.size()]);
        int flip = area < 0 ? -1 : 1;
        tf.signs.assign(q.edges.size(), 0);
        for (auto& [e, s] : ecycle) tf.signs[e] = s * flip;
        QVec total((size_t)plane_dim, Rat(0));
        for (size_t e = 0; e < q.edges.size(); ++e)
            if (tf.signs[e] != 0) total = add(total, scale(Rat(tf.signs[e]), q.edges[e].dir));
        if (!is_zero(total)) throw internal_error("2-face sign vector does not close");
        q.two_faces.push_back(tf);
    }

    // components: edges glued through shared non-lattice vertices
    UnionFind uf((int)q.edges.size());
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.vertices[v].lattice) continue;
        int first = -1;
        for (size_t e = 0; e < q.edges.size(); ++e) {
            if (q.edges[e].from == (int)v || q.edges[e].to == (int)v) {
                if (first < 0)
                    first = (int)e;
                else
                    uf.unite((int)e, first);
            }
        }
    }
    q.edge_component.assign(q.edges.size(), -1);
    std::map<int, int> comp_id;
    for (size_t e = 0; e < q.edges.size(); ++e) {
        int root = uf.find((int)e);
        if (!comp_id.count(root)) comp_id[root] = (int)comp_id.size();
        q.edge_component[e] = comp_id[root];
    }
    q.num_components = (int)comp_id.size();
    return q;
}

}  // namespace defo
