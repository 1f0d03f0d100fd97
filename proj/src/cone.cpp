#include "defo/cone.hpp"

#include <algorithm>
#include <set>

#include "defo/linalg.hpp"

namespace defo {

namespace {

IVec combine(const Int& s, const IVec& a, const Int& t, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
    return r;
}

IVec make_primitive(const IVec& v) {
    Int g = gcd_vec(v);
    if (g <= 1) return v;
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

void sort_unique(IMat& rows) {
    std::sort(rows.begin(), rows.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::set<int> tight_set(const IMat& processed, const IVec& r) {
    std::set<int> t;
    for (size_t i = 0; i < processed.size(); ++i)
        if (dot(processed[i], r) == 0) t.insert((int)i);
    return t;
}

}  // namespace

DDResult rays_from_inequalities(const IMat& ineqs_in, int dim) {
    IMat ineqs;
    for (const IVec& h : ineqs_in) {
        if ((int)h.size() != dim) throw internal_error("rays_from_inequalities: bad covector size");
        if (!is_zero(h)) ineqs.push_back(h);
    }

    IMat lin;
    for (int i = 0; i < dim; ++i) {
        IVec e(dim, 0);
        e[i] = 1;
        lin.push_back(e);
    }
    IMat rays;
    IMat processed;

    for (const IVec& h : ineqs) {
        int piv = -1;
        for (size_t i = 0; i < lin.size(); ++i) {
            if (dot(h, lin[i]) != 0) {
                piv = (int)i;
                break;
            }
        }
        if (piv >= 0) {
            // h cuts the lineality space: one basis vector becomes a ray,
            // everything else is projected into the hyperplane of h
            IVec w = lin[piv];
            Int dw = dot(h, w);
            if (dw < 0) {
                w = neg(w);
                dw = -dw;
            }
            IMat newlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if ((int)i == piv) continue;
                Int di = dot(h, lin[i]);
                newlin.push_back(make_primitive(combine(dw, lin[i], -di, w)));
            }
            IMat newrays;
            for (const IVec& r : rays) {
                Int dr = dot(h, r);
                IVec pr = combine(dw, r, -dr, w);
                if (!is_zero(pr)) newrays.push_back(make_primitive(pr));
            }
            newrays.push_back(w);
            lin = std::move(newlin);
            rays = std::move(newrays);
            sort_unique(rays);
        } else {
            std::vector<Int> vals(rays.size());
            bool any_negative = false;
            for (size_t i = 0; i < rays.size(); ++i) {
                vals[i] = dot(h, rays[i]);
                if (vals[i] < 0) any_negative = true;
            }
            if (any_negative) {
                std::vector<std::set<int>> tights(rays.size());
                for (size_t i = 0; i < rays.size(); ++i) tights[i] = tight_set(processed, rays[i]);
                IMat newrays;
                for (size_t i = 0; i < rays.size(); ++i)
                    if (vals[i] >= 0) newrays.push_back(rays[i]);
                for (size_t p = 0; p < rays.size(); ++p) {
                    if (vals[p] <= 0) continue;
                    for (size_t m = 0; m < rays.size(); ++m) {
                        if (vals[m] >= 0) continue;
                        // combinatorial adjacency test
                        std::set<int> common;
                        std::set_intersection(tights[p].begin(), tights[p].end(), tights[m].begin(),
                                              tights[m].end(), std::inserter(common, common.begin()));
                        bool adjacent = true;
                        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
                            if (o == p || o == m) continue;
                            bool covers = true;
                            for (int ci : common) {
                                if (dot(processed[ci], rays[o]) != 0) {
                                    covers = false;
                                    break;
                                }
                            }
                            if (covers) adjacent = false;
                        }
                        if (!adjacent) continue;
                        IVec nr = combine(vals[p], rays[m], -vals[m], rays[p]);
                        if (!is_zero(nr)) newrays.push_back(make_primitive(nr));
                    }
                }
                rays = std::move(newrays);
                sort_unique(rays);
            }
        }
        processed.push_back(h);
    }

    DDResult res;
    res.rays = rays;
    sort_unique(res.rays);
    if (!lin.empty()) res.lineality = hermite_normal_form(lin).h;
    return res;
}

bool PointedCone::contains(const IVec& x) const {
    for (const IVec& e : equations)
        if (dot(e, x) != 0) return false;
    for (const IVec& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool PointedCone::interior_contains(const IVec& x) const {
    if (!full_dimensional()) return false;
    for (const IVec& f : facets)
        if (dot(f, x) <= 0) return false;
    return true;
}

PointedCone PointedCone::from_rays(IMat generators, int dim) {
    IMat gens;
    for (const IVec& g : generators) {
        if ((int)g.size() != dim) throw input_error("ray has wrong dimension");
        if (!is_zero(g)) gens.push_back(make_primitive(g));
    }
    sort_unique(gens);

    PointedCone c;
    c.dim = dim;
    c.equations = kernel_lattice(gens.empty() ? IMat{IVec(dim, 0)} : gens, dim);
    if (gens.empty()) {
        c.smooth2faces = true;
        return c;
    }

    DDResult dual = rays_from_inequalities(gens, dim);
    c.facets = dual.rays;

    IMat primal_ineqs = c.facets;
    for (const IVec& e : c.equations) {
        primal_ineqs.push_back(e);
        primal_ineqs.push_back(neg(e));
    }
    DDResult primal = rays_from_inequalities(primal_ineqs, dim);
    if (!primal.lineality.empty()) throw hypothesis_error("cone is not pointed");
    c.rays = primal.rays;
    c.smooth2faces = check_codim2_smooth(c);
    return c;
}

PointedCone dual_cone(const PointedCone& c) {
    if (!c.full_dimensional())
        throw hypothesis_error("dual of a lower-dimensional cone is not pointed");
    PointedCone d;
    d.dim = c.dim;
    d.rays = c.facets;
    d.facets = c.rays;
    d.smooth2faces = check_codim2_smooth(d);
    return d;
}

std::vector<std::vector<int>> faces(const PointedCone& c, int face_dim) {
    const int nrays = (int)c.rays.size();
    // closure of the facet faces under intersection
    std::set<std::vector<int>> all;
    std::vector<int> whole(nrays);
    for (int i = 0; i < nrays; ++i) whole[i] = i;
    all.insert(whole);
    std::vector<std::vector<int>> work;
    for (const IVec& f : c.facets) {
        std::vector<int> fs;
        for (int i = 0; i < nrays; ++i)
            if (dot(f, c.rays[i]) == 0) fs.push_back(i);
        if (all.insert(fs).second) work.push_back(fs);
    }
    while (!work.empty()) {
        std::vector<int> cur = work.back();
        work.pop_back();
        std::vector<std::vector<int>> snapshot(all.begin(), all.end());
        for (const std::vector<int>& other : snapshot) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), other.begin(), other.end(),
                                  std::back_inserter(inter));
            if (all.insert(inter).second) work.push_back(inter);
        }
    }
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& f : all) {
        IMat sub;
        for (int i : f) sub.push_back(c.rays[i]);
        int d = sub.empty() ? 0 : rank(sub);
        if (d == face_dim) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_codim2_smooth(const PointedCone& c) {
    for (const std::vector<int>& f : faces(c, 2)) {
        if (f.size() != 2) throw internal_error("2-face with unexpected ray count");
        const IVec& a = c.rays[f[0]];
        const IVec& b = c.rays[f[1]];
        Int g = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j) g = gcd(g, a[i] * b[j] - a[j] * b[i]);
        if (g < 0) g = -g;
        if (g != 1) return false;
    }
    return true;
}

}  // namespace defo
