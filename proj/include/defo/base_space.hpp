#pragma once

#include "defo/minkowski.hpp"
#include "defo/poly.hpp"

namespace defo {

// The base-space ideal generated by the power-sum polynomials g_{d,k},
// in collapsed t-variables and rewritten in difference variables
// w_i = t_i - t_{i+1}.

struct BaseIdeal {
    int num_t = 0;  // collapsed variables m
    std::vector<Poly> generators;       // minimal, in t_1..t_m
    std::vector<Poly> diff_generators;  // minimal, in w_1..w_{m-1}
    std::vector<Poly> t_groebner;
    std::vector<Poly> w_groebner;
    int truncation_k = 0;
    bool minimalized = true;

    std::vector<std::string> t_names() const;
    std::vector<std::string> w_names() const;
};

// the two scalar closing polynomials per compact 2-face, at exponent k
std::vector<Poly> face_polynomials(const SummandSpace& s, int k);

// sum_i d_i t_i^k for d in V^perp
Poly g_poly(const SummandSpace& s, const QVec& d, int k);

// prod t^{d+} - prod t^{d-} for d in V^perp cap Z^m
Poly toric_equation(const SummandSpace& s, const IVec& d);

// generators over an HNF basis of V^perp cap Z^m with per-vector cutoff
// k <= sum(d+); extra_truncation further degrees are checked to lie in the
// ideal already (failure is an internal error)
BaseIdeal base_ideal(const SummandSpace& s, int extra_truncation = 1);

// dim of W_k = (J / ((w) J + J_1 C[w]))_k for k = 1..kmax, in w-variables
std::vector<int> obstruction_space_dims(const BaseIdeal& b, int kmax);

}  // namespace defo
