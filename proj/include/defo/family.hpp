#pragma once

#include <map>

#include "defo/base_space.hpp"
#include "defo/hilbert.hpp"
#include "defo/poly.hpp"

namespace defo {

// Equations of the toric variety cut out by the generator set, and their
// liftings over the base space.
//
// f-polynomials live in C[t, z_1..z_w] (variable 0 is t); F-polynomials live
// in C[t_1..t_m, Z_1..Z_w] (variables 0..m-1 are the t_i).

struct EquationTag {
    IVec a, b;       // z-exponents, length w
    Int alpha, beta;  // t-exponents
};

bool operator==(const EquationTag& x, const EquationTag& y);

struct ToricIdeal {
    std::vector<EquationTag> tags;
    std::vector<Poly> binomials;  // parallel to tags
    int num_z = 0;
    int max_total_degree = 0;

    std::vector<std::string> f_names() const;  // t, z1..zw
};

struct FamilyEquation {
    EquationTag tag;
    Poly f;    // in C[t, z]
    Poly F;    // in C[t_1..t_m, Z]
    IVec rep;  // the chosen monomial p^c
};

// minimal binomial generators up to the given total degree, by connecting
// the components of the degree fibers
ToricIdeal toric_ideal(const GeneratorSet& g, int max_total_degree = 6);

// shared caches for the lifting machinery
class Lifter {
  public:
    Lifter(const SummandSpace& s, const GeneratorSet& g);

    FamilyEquation lift(const EquationTag& tag) const;
    std::vector<FamilyEquation> lift_all(const ToricIdeal& ideal) const;

    int num_z() const { return (int)z_index_.size(); }
    int num_t() const { return s_.num_vars; }
    std::vector<std::string> big_names() const;  // t1..tm, Z1..Zw

    const SummandSpace& space() const { return s_; }
    const GeneratorSet& gens() const { return g_; }
    const EtaFunctional& eta_star_of(int z) const { return eta_stars_[z]; }
    const Int& eta0_star_of(int z) const { return eta0_stars_[z]; }
    const IVec& c_of(int z) const { return cs_[z]; }

    // p^c: lexicographically smallest representation of [c, eta0*(c)] over
    // generators lying on the minimal face containing it
    IVec representation(const IVec& c) const;

    Poly f_of_tag(const EquationTag& tag) const;

  private:
    SummandSpace s_;
    GeneratorSet g_;
    std::vector<int> z_index_;           // z position -> element index
    std::vector<IVec> cs_;               // c^nu per z position
    std::vector<Int> eta0_stars_;
    std::vector<EtaFunctional> eta_stars_;
    IVec w_int_;                         // positive functional on the dual
    mutable std::map<IVec, IVec> rep_cache_;
};

// substitute t_i -> t, Z -> z in every lifted equation
std::vector<Poly> special_fiber(const std::vector<FamilyEquation>& eqs, int num_t);

struct LiftCheckReport {
    int type1_checked = 0, type1_failed = 0;
    int type2_checked = 0, type2_failed = 0;
    int type3_checked = 0, type3_failed = 0;
    int spair_checked = 0, spair_failed = 0;
    bool ok() const { return type1_failed + type2_failed + type3_failed + spair_failed == 0; }
};

LiftCheckReport check_relation_lifts(const Lifter& lifter, const ToricIdeal& ideal,
                                     const std::vector<FamilyEquation>& eqs,
                                     const BaseIdeal& base);

}  // namespace defo
