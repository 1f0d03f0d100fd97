#include "defo/base_space.hpp"

#include <algorithm>

#include "defo/linalg.hpp"

namespace defo {

std::vector<std::string> BaseIdeal::t_names() const {
    std::vector<std::string> n;
    for (int i = 1; i <= num_t; ++i) n.push_back("t" + std::to_string(i));
    return n;
}

std::vector<std::string> BaseIdeal::w_names() const {
    std::vector<std::string> n;
    for (int i = 1; i < num_t; ++i) n.push_back("w" + std::to_string(i) + std::to_string(i + 1));
    return n;
}

std::vector<Poly> face_polynomials(const SummandSpace& s, int k) {
    if (k < 1) throw input_error("face polynomials need k >= 1");
    std::vector<Poly> out;
    const int m = s.num_vars;
    const int plane_dim = (int)s.cross.plane_basis.size();
    for (const CSTwoFace& tf : s.cross.two_faces) {
        for (int coord = 0; coord < plane_dim; ++coord) {
            Poly p = Poly::zero(m);
            QVec coeff(m, Rat(0));
            for (int e = 0; e < s.num_edges; ++e)
                if (tf.signs[e] != 0) coeff[s.collapse[e]] += Rat(tf.signs[e]) * s.cross.edges[e].dir[coord];
            for (int i = 0; i < m; ++i) {
                if (coeff[i] == 0) continue;
                Mono mo(m, 0);
                mo[i] = k;
                p = add(p, Poly::monomial(m, mo, coeff[i]));
            }
            if (!p.is_zero()) out.push_back(p);
        }
    }
    return out;
}

Poly g_poly(const SummandSpace& s, const QVec& d, int k) {
    if (k < 1) throw input_error("g polynomials need k >= 1");
    if ((int)d.size() != s.num_vars) throw input_error("g_poly: wrong coefficient size");
    for (const QVec& v : s.v_basis)
        if (dot(v, d) != 0) throw hypothesis_error("coefficient vector is not in V-perp");
    Poly p = Poly::zero(s.num_vars);
    for (int i = 0; i < s.num_vars; ++i) {
        if (d[i] == 0) continue;
        Mono mo(s.num_vars, 0);
        mo[i] = k;
        p = add(p, Poly::monomial(s.num_vars, mo, d[i]));
    }
    return p;
}

Poly toric_equation(const SummandSpace& s, const IVec& d) {
    if ((int)d.size() != s.num_vars) throw input_error("toric_equation: wrong vector size");
    for (const QVec& v : s.v_basis)
        if (dot(v, to_qvec(d)) != 0) throw hypothesis_error("vector is not in V-perp");
    Mono plus(s.num_vars, 0), minus(s.num_vars, 0);
    for (int i = 0; i < s.num_vars; ++i) {
        long e = d[i].get_si();
        if (e > 0) plus[i] = (int)e;
        if (e < 0) minus[i] = (int)-e;
    }
    if (plus == minus) return Poly::zero(s.num_vars);
    return sub(Poly::monomial(s.num_vars, plus, 1), Poly::monomial(s.num_vars, minus, 1));
}

namespace {

// g_{d,k}(t - t_1) expressed in w-variables via t_i - t_1 = -(w_1+...+w_{i-1})
Poly g_poly_diff(const IVec& d, int k, int m) {
    Poly out = Poly::zero(m - 1);
    for (int i = 0; i < m; ++i) {
        if (d[i] == 0) continue;
        Poly lin = Poly::zero(m - 1);
        for (int j = 0; j < i; ++j) lin = sub(lin, Poly::variable(m - 1, j));
        Poly pw = Poly::constant(m - 1, 1);
        for (int e = 0; e < k; ++e) pw = mul(pw, lin);
        out = add(out, scale(Rat(d[i]), pw));
    }
    return out;
}

Int positive_part_sum(const IVec& d) {
    Int s = 0;
    for (const Int& x : d)
        if (x > 0) s += x;
    return s;
}

}  // namespace

BaseIdeal base_ideal(const SummandSpace& s, int extra_truncation) {
    BaseIdeal b;
    b.num_t = s.num_vars;

    std::vector<Poly> raw, raw_diff;
    int kmax = 0;
    for (const IVec& d : s.vperp_lattice) {
        int cutoff = (int)positive_part_sum(d).get_si();
        kmax = std::max(kmax, cutoff);
        for (int k = 1; k <= cutoff; ++k) {
            Poly g = g_poly(s, to_qvec(d), k);
            if (!g.is_zero()) raw.push_back(g);
            Poly gd = g_poly_diff(d, k, b.num_t);
            if (!gd.is_zero()) raw_diff.push_back(gd);
        }
    }
    b.truncation_k = kmax;
    b.generators = minimalize(raw);
    b.diff_generators = minimalize(raw_diff);
    b.t_groebner = buchberger(b.generators);
    b.w_groebner = buchberger(b.diff_generators);

    // ideal equality of the t-form and the difference form, pulled back to t
    {
        std::vector<Poly> pulled;
        std::vector<Poly> images;  // w_j -> t_j - t_{j+1}
        for (int j = 0; j + 1 < b.num_t; ++j)
            images.push_back(sub(Poly::variable(b.num_t, j), Poly::variable(b.num_t, j + 1)));
        for (const Poly& g : b.diff_generators) pulled.push_back(substitute(g, images, b.num_t));
        if (!same_ideal(b.generators, pulled))
            throw internal_error("difference form does not generate the same ideal");
    }

    // stability: the next degrees must already lie in the ideal
    for (const IVec& d : s.vperp_lattice) {
        int cutoff = (int)positive_part_sum(d).get_si();
        for (int k = cutoff + 1; k <= cutoff + extra_truncation; ++k) {
            if (!ideal_contains(b.t_groebner, g_poly(s, to_qvec(d), k)))
                throw internal_error("truncation bound violated: extra degree enlarges the ideal");
            if (!ideal_contains(b.w_groebner, g_poly_diff(d, k, b.num_t)))
                throw internal_error("truncation bound violated in difference variables");
        }
    }
    return b;
}

std::vector<int> obstruction_space_dims(const BaseIdeal& b, int kmax) {
    if (!b.minimalized) throw input_error("obstruction space needs a minimalized ideal");
    std::vector<int> dims;
    const int nw = b.num_t - 1;
    std::vector<Poly> linear_part;
    for (const Poly& g : b.diff_generators)
        if (g.degree() == 1) linear_part.push_back(g);
    for (int k = 1; k <= kmax; ++k) {
        int jk = graded_piece_dim(b.diff_generators, k);
        // (w)J + J_1 C[w] in degree k
        std::vector<Poly> tilde;
        for (const Poly& g : b.diff_generators)
            for (int i = 0; i < nw; ++i) tilde.push_back(mul(g, Poly::variable(nw, i)));
        for (const Poly& l : linear_part) tilde.push_back(l);
        int jtk = graded_piece_dim(tilde, k);
        dims.push_back(jk - jtk);
    }
    return dims;
}

}  // namespace defo
