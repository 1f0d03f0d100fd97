#include "defo/tangent.hpp"

#include <algorithm>
#include <set>

#include "defo/linalg.hpp"

namespace defo {

namespace {

// basis of the rational relation space of the selected elements, embedded
// into Q^{#elements}
QMat relation_space(const GeneratorSet& g, const std::vector<int>& selection) {
    if (selection.empty()) return {};
    const int n = (int)g.elements[0].size();
    QMat m(n, QVec(selection.size()));
    for (size_t j = 0; j < selection.size(); ++j)
        for (int i = 0; i < n; ++i) m[i][j] = Rat(g.elements[selection[j]][i]);
    QMat ker = kernel_basis(m, (int)selection.size());
    QMat out;
    for (const QVec& k : ker) {
        QVec big(g.elements.size(), Rat(0));
        for (size_t j = 0; j < selection.size(); ++j) big[selection[j]] = k[j];
        out.push_back(big);
    }
    return out;
}

int stack_rank(const std::vector<QMat>& spaces) {
    QMat all;
    for (const QMat& s : spaces)
        for (const QVec& v : s) all.push_back(v);
    return all.empty() ? 0 : rank(all);
}

}  // namespace

ESets e_sets(const PointedCone& c, const IVec& r, const GeneratorSet& g, std::optional<int> k) {
    if (!g.decorated) throw input_error("e_sets needs a decorated generator set");
    ESets out;
    out.level = k;
    out.per_ray.resize(c.rays.size());
    for (size_t j = 0; j < c.rays.size(); ++j) {
        Int h = dot(c.rays[j], r);
        for (size_t i = 0; i < g.elements.size(); ++i) {
            if ((int)i == g.r_index) {
                if (k) out.per_ray[j].push_back((int)i);
                continue;
            }
            Int v = dot(c.rays[j], g.elements[i]);
            Int threshold = k ? Int(*k) * h : h;
            if (v < threshold) out.per_ray[j].push_back((int)i);
        }
    }
    for (size_t i = 0; i < g.elements.size(); ++i) {
        bool on_boundary = false;
        for (const IVec& a : c.rays)
            if (dot(a, g.elements[i]) == 0) on_boundary = true;
        if (on_boundary) out.boundary.push_back((int)i);
    }
    return out;
}

std::pair<int, int> t1_dimension(const PointedCone& c, const IVec& r, const GeneratorSet& g) {
    if (!check_codim2_smooth(c))
        throw hypothesis_error("cone is not smooth in codimension two: formula invalid");
    CrossSection q = cross_section(c, r);
    SummandSpace s = summand_space(q);
    int via_v = s.dim_v() - (s.num_edges > 0 ? 1 : 0);

    ESets es = e_sets(c, r, g);
    QMat boundary_relations = relation_space(g, es.boundary);
    std::vector<QMat> ej;
    for (const auto& sel : es.per_ray) ej.push_back(relation_space(g, sel));
    // rays of height >= 2 may contribute relations through interior elements,
    // so quotient by the intersection with the boundary relation space
    int dim_boundary = stack_rank({boundary_relations});
    int dim_sum = stack_rank(ej);
    std::vector<QMat> both = ej;
    both.push_back(boundary_relations);
    int dim_join = stack_rank(both);
    int dim_meet = dim_boundary + dim_sum - dim_join;
    int via_e = dim_boundary - dim_meet;
    return {via_v, via_e};
}

Rat ks_pairing(const SummandSpace& s, const GeneratorSet& g, const QVec& t, const QVec& relation) {
    if (!g.decorated) throw input_error("pairing needs a decorated generator set");
    if (relation.size() != g.elements.size()) throw input_error("relation has wrong length");
    Rat total = 0;
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (relation[i] == 0) continue;
        if ((int)i == g.r_index)
            throw input_error("relation touches the distinguished degree R");
        EtaFunctional es = eta_star(s, g.decorations[i].c);
        total += relation[i] * s.pair(t, es.coords);
    }
    return total;
}

int t2_dimension(const PointedCone& c, const IVec& r, const GeneratorSet& g, int k) {
    if (!check_codim2_smooth(c))
        throw hypothesis_error("cone is not smooth in codimension two: formula invalid");
    if (k < 1) throw input_error("t2 needs k >= 1");
    CrossSection q = cross_section(c, r);
    ESets es = e_sets(c, r, g, k);

    // vertices of Q index the summands; compact edges index the overlaps
    std::vector<int> vertex_rays;
    for (const CSVertex& v : q.vertices) vertex_rays.push_back(v.ray);
    std::vector<QMat> per_vertex;
    for (int ray : vertex_rays) per_vertex.push_back(relation_space(g, es.per_ray[ray]));

    int sum_dims = 0;
    for (const QMat& sp : per_vertex) sum_dims += (int)sp.size();
    int image_rank = stack_rank(per_vertex);
    int ker_dim = sum_dims - image_rank;

    // image of the edge differentials in the direct sum
    const size_t ne = g.elements.size();
    QMat rows;
    for (const CSEdge& e : q.edges) {
        int i = e.from, j = e.to;
        std::vector<int> common;
        const auto &si = es.per_ray[vertex_rays[i]], &sj = es.per_ray[vertex_rays[j]];
        std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(common));
        for (const QVec& rel : relation_space(g, common)) {
            QVec big((size_t)q.vertices.size() * ne, Rat(0));
            for (size_t t = 0; t < ne; ++t) {
                big[(size_t)i * ne + t] = rel[t];
                big[(size_t)j * ne + t] = -rel[t];
            }
            rows.push_back(big);
        }
    }
    int im_dim = rows.empty() ? 0 : rank(rows);
    return ker_dim - im_dim;
}

GorensteinCompanion gorenstein_companion(const PointedCone& c, const IVec& r) {
    if (c.dim != 3) throw hypothesis_error("companion construction needs a 3-dimensional cone");
    for (const IVec& a : c.rays)
        if (dot(a, r) <= 0) throw hypothesis_error("R is not interior");
    CrossSection q = cross_section(c, r);
    IMat lattice_rays;
    for (size_t i = 0; i < c.rays.size(); ++i)
        if (dot(c.rays[i], r) == 1) lattice_rays.push_back(c.rays[i]);
    GorensteinCompanion out;
    out.companion = PointedCone::from_rays(lattice_rays, 3);
    if (!out.companion.full_dimensional())
        throw hypothesis_error("lattice vertices do not span a full-dimensional cone");
    if (!check_codim2_smooth(out.companion))
        throw hypothesis_error("companion polygon has a non-primitive edge");
    out.dim_v = summand_space(q).dim_v();
    out.dim_v_companion = summand_space(cross_section(out.companion, r)).dim_v();
    return out;
}

std::vector<IVec> interesting_degrees(const PointedCone& c) {
    if (c.dim != 3) throw hypothesis_error("interesting degrees need a 3-dimensional cone");
    if (!c.full_dimensional()) throw hypothesis_error("cone must be full-dimensional");
    if (!check_codim2_smooth(c))
        throw hypothesis_error("cone is not smooth in codimension two");
    const int n = 3;
    const size_t nrays = c.rays.size();
    std::set<IVec> candidates;

    auto solve_exact = [&](const IMat& lhs, const IVec& rhs) -> std::optional<IVec> {
        QMat a = to_qmat(lhs);
        QVec b = to_qvec(rhs);
        if (rank(to_qmat(lhs)) < n) return std::nullopt;
        auto x = solve(a, b);
        if (!x) return std::nullopt;
        // the solution must reproduce every equation (overdetermined case)
        for (size_t i = 0; i < lhs.size(); ++i)
            if (dot(to_qvec(lhs[i]), *x) != b[i]) return std::nullopt;
        IVec out(n);
        for (int i = 0; i < n; ++i) {
            if (!is_integer((*x)[i])) return std::nullopt;
            out[i] = (*x)[i].get_num();
        }
        return out;
    };

    // interior case: four rays at height one
    for (size_t i = 0; i < nrays; ++i)
        for (size_t j = i + 1; j < nrays; ++j)
            for (size_t k = j + 1; k < nrays; ++k)
                for (size_t l = k + 1; l < nrays; ++l) {
                    IMat lhs = {c.rays[i], c.rays[j], c.rays[k], c.rays[l]};
                    if (auto x = solve_exact(lhs, {1, 1, 1, 1})) candidates.insert(*x);
                }

    // boundary case: two rays at height one, one at height zero
    for (size_t i = 0; i < nrays; ++i)
        for (size_t j = i + 1; j < nrays; ++j)
            for (size_t k = 0; k < nrays; ++k) {
                if (k == i || k == j) continue;
                IMat lhs = {c.rays[i], c.rays[j], c.rays[k]};
                if (auto x = solve_exact(lhs, {1, 1, 0})) candidates.insert(*x);
            }

    // boundary case with a single lattice vertex: bounded segment search
    auto spans_two_face = [&](size_t i, size_t k) {
        for (const IVec& f : c.facets)
            if (dot(f, c.rays[i]) == 0 && dot(f, c.rays[k]) == 0) return true;
        return false;
    };
    for (size_t i = 0; i < nrays; ++i) {
        for (size_t k = 0; k < nrays; ++k) {
            if (k == i || spans_two_face(i, k)) continue;
            // integer solutions of <a_i, R> = 1, <a_k, R> = 0
            IMat sys = {c.rays[i], c.rays[k]};
            IMat ker = kernel_lattice(sys, n);
            if (ker.size() != 1) continue;
            IVec dir = ker[0];
            auto base_opt = solve_integer(sys, {1, 0});
            if (!base_opt) continue;
            IVec base = *base_opt;
            // s-interval from the remaining ray constraints
            bool unbounded_low = true, unbounded_high = true;
            Rat lo = 0, hi = 0;
            for (const IVec& ray : c.rays) {
                Int v0 = dot(ray, base);
                Int vd = dot(ray, dir);
                if (vd == 0) {
                    if (v0 < 0) {
                        unbounded_low = unbounded_high = false;
                        lo = 1;
                        hi = 0;  // empty
                        break;
                    }
                    continue;
                }
                Rat bound = Rat(-v0) / Rat(vd);
                if (vd > 0) {
                    if (unbounded_low || bound > lo) lo = bound;
                    unbounded_low = false;
                } else {
                    if (unbounded_high || bound < hi) hi = bound;
                    unbounded_high = false;
                }
            }
            if (unbounded_low || unbounded_high)
                throw internal_error("single-vertex search segment is unbounded");
            for (Int sv = ceil_rat(lo); sv <= floor_rat(hi); ++sv) {
                IVec cand(n);
                for (int t = 0; t < n; ++t) cand[t] = base[t] + sv * dir[t];
                candidates.insert(cand);
            }
        }
    }

    // verification pass: keep exactly the degrees with dim(V/1) > 0
    std::vector<IVec> out;
    for (const IVec& cand : candidates) {
        if (is_zero(cand)) continue;
        if (gcd_vec(cand) != 1) continue;
        bool valid = true;
        for (const IVec& ray : c.rays)
            if (dot(ray, cand) < 0) valid = false;
        if (!valid) continue;
        try {
            CrossSection q = cross_section(c, cand);
            SummandSpace s = summand_space(q);
            int dim_quot = s.dim_v() - (s.num_edges > 0 ? 1 : 0);
            if (dim_quot > 0) out.push_back(cand);
        } catch (const hypothesis_error&) {
            continue;  // rigid degree
        }
    }
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return out;
}

}  // namespace defo
