#pragma once

#include <string>

#include "defo/rational.hpp"

namespace defo {

// Sparse multivariate polynomials over Q with graded-lex term order.

using Mono = std::vector<int>;

int mono_deg(const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& a, const Mono& b);      // a / b, assumes divisibility
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_less(const Mono& a, const Mono& b);  // graded-lex

struct Poly {
    int nvars = 0;
    // sorted descending in the term order, no zero coefficients
    std::vector<std::pair<Mono, Rat>> terms;

    static Poly zero(int nvars) { return Poly{nvars, {}}; }
    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(int nvars, const Mono& m, const Rat& c);
    static Poly variable(int nvars, int i);

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    bool homogeneous() const;
    const std::pair<Mono, Rat>& lead() const;
    Poly monic() const;

    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mul_term(const Poly& a, const Mono& m, const Rat& c);
Poly scale(const Rat& c, const Poly& a);

// substitute variable i by images[i]; images live in a ring with target_nvars
Poly substitute(const Poly& p, const std::vector<Poly>& images, int target_nvars);

// full normal form with respect to a generating list (deterministic)
Poly normal_form(const Poly& f, const std::vector<Poly>& gens);

Poly spoly(const Poly& a, const Poly& b);

// Buchberger; max_degree >= 0 truncates S-pair lcm degrees (complete for
// homogeneous ideals up to that degree, a sound certificate otherwise)
std::vector<Poly> buchberger(std::vector<Poly> gens, int max_degree = -1);

bool ideal_contains(const std::vector<Poly>& gb, const Poly& f);
bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b);

// drop generators contained in the ideal of the others
std::vector<Poly> minimalize(std::vector<Poly> gens);

std::vector<Mono> monomials_of_degree(int nvars, int deg);

// dimension of the degree-k slice of the span of {mono * g}; gens homogeneous
int graded_piece_dim(const std::vector<Poly>& gens, int k);

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names);

}  // namespace defo
