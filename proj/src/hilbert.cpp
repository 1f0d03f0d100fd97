#include "defo/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "defo/linalg.hpp"

namespace defo {

namespace {

// pulling triangulation into simplicial subcones, recursing over facets
void pull_triangulate(const IMat& rays, int dim, std::vector<IMat>& out) {
    if ((int)rays.size() == rank(rays)) {
        out.push_back(rays);
        return;
    }
    PointedCone sub = PointedCone::from_rays(rays, dim);
    const IVec apex = sub.rays[0];
    for (const IVec& f : sub.facets) {
        if (dot(f, apex) == 0) continue;
        IMat facet_rays;
        for (const IVec& r : sub.rays)
            if (dot(f, r) == 0) facet_rays.push_back(r);
        std::vector<IMat> pieces;
        pull_triangulate(facet_rays, dim, pieces);
        for (IMat& piece : pieces) {
            piece.push_back(apex);
            out.push_back(piece);
        }
    }
}

// lattice points in the half-open parallelepiped of a full-rank simplex
IMat parallelepiped_points(const IMat& simplex, int dim) {
    // inverse of the column matrix of the rays
    QMat a(dim, QVec(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a[i][j] = Rat(simplex[j][i]);
    QMat inv(dim, QVec(dim));
    for (int col = 0; col < dim; ++col) {
        QVec e(dim, Rat(0));
        e[col] = 1;
        auto x = solve(a, e);
        if (!x) throw internal_error("simplex matrix is singular");
        for (int i = 0; i < dim; ++i) inv[i][col] = (*x)[i];
    }
    IVec lo(dim, 0), hi(dim, 0);
    for (int c = 0; c < dim; ++c) {
        for (int i = 0; i < dim; ++i) {
            if (simplex[i][c] < 0) lo[c] += simplex[i][c];
            if (simplex[i][c] > 0) hi[c] += simplex[i][c];
        }
    }
    IMat found;
    IVec x(dim);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == dim) {
            if (is_zero(x)) return;
            QVec lambda = mat_vec(inv, to_qvec(x));
            for (const Rat& l : lambda)
                if (l < 0 || l >= 1) return;
            found.push_back(x);
            return;
        }
        for (Int v = lo[pos]; v <= hi[pos]; ++v) {
            x[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return found;
}

}  // namespace

IVec positive_functional(const PointedCone& primal) {
    IVec w(primal.dim, 0);
    for (const IVec& r : primal.rays)
        for (int i = 0; i < primal.dim; ++i) w[i] += r[i];
    return w;
}

std::vector<int> GeneratorSet::z_elements() const {
    std::vector<int> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if ((int)i != r_index) out.push_back((int)i);
    return out;
}

GeneratorSet hilbert_basis(const PointedCone& c) {
    if (!c.full_dimensional())
        throw hypothesis_error("dual cone is not pointed: cone is not full-dimensional");
    const int dim = c.dim;
    PointedCone dual = dual_cone(c);

    std::vector<IMat> simplices;
    pull_triangulate(dual.rays, dim, simplices);

    // candidates: simplex generators plus parallelepiped points
    IMat candidates;
    for (const IMat& s : simplices) {
        for (const IVec& r : s) candidates.push_back(r);
        for (const IVec& p : parallelepiped_points(s, dim)) candidates.push_back(p);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // greedy irreducibility sieve in order of a positive functional
    IVec w = positive_functional(c);
    std::stable_sort(candidates.begin(), candidates.end(), [&](const IVec& a, const IVec& b) {
        Int wa = dot(w, a), wb = dot(w, b);
        if (wa != wb) return wa < wb;
        return lex_less(a, b);
    });
    IMat kept;
    for (const IVec& x : candidates) {
        bool reducible = false;
        for (const IVec& h : kept) {
            IVec rest(dim);
            for (int i = 0; i < dim; ++i) rest[i] = x[i] - h[i];
            if (is_zero(rest)) continue;
            if (dual.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) kept.push_back(x);
    }

    GeneratorSet g;
    g.dual = dual;
    g.elements = kept;
    return g;
}

GeneratorSet e_decorate(GeneratorSet g, const SummandSpace& s, const IMat& preferred_zorder) {
    const CrossSection& q = s.cross;
    struct Entry {
        IVec m;
        Decoration d;
    };
    std::vector<Entry> entries;
    int r_count = 0;
    for (const IVec& m : g.elements) {
        auto [c, z] = q.split_covector(m);
        Decoration d;
        d.c = c;
        d.z = z;
        d.is_r = is_zero(c) && z == 1;
        if (d.is_r) {
            ++r_count;
        } else {
            SupportDatum sd = support_data(q, c);
            if (sd.eta0_star != z)
                throw hypothesis_error("generator decoration failed: last coordinate is not eta0*");
        }
        entries.push_back({m, d});
    }
    if (r_count != 1) throw hypothesis_error("distinguished degree R is not a Hilbert basis element");

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.d.is_r != b.d.is_r) return a.d.is_r;
        if (a.d.z != b.d.z) return a.d.z < b.d.z;
        return lex_less(a.d.c, b.d.c);
    });
    if (!preferred_zorder.empty()) {
        if (preferred_zorder.size() + 1 != entries.size())
            throw input_error("generator order has the wrong number of elements");
        std::vector<Entry> reordered = {entries[0]};  // R first
        std::vector<bool> used(entries.size(), false);
        for (const IVec& m : preferred_zorder) {
            bool found = false;
            for (size_t i = 1; i < entries.size(); ++i) {
                if (!used[i] && entries[i].m == m) {
                    reordered.push_back(entries[i]);
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if (!found) throw input_error("generator order is not a permutation of the Hilbert basis");
        }
        entries = reordered;
    }
    g.elements.clear();
    g.decorations.clear();
    for (size_t i = 0; i < entries.size(); ++i) {
        g.elements.push_back(entries[i].m);
        g.decorations.push_back(entries[i].d);
        if (entries[i].d.is_r) g.r_index = (int)i;
    }
    g.decorated = true;
    return g;
}

}  // namespace defo
