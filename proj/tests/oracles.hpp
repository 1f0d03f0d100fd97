#pragma once

// Test-only reference implementations, kept independent of the library's
// algorithms so they can serve as oracles.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "defo/cone.hpp"
#include "defo/linalg.hpp"
#include "defo/rational.hpp"

namespace oracle {

using namespace defo;

// Extreme rays of {x : h x >= 0} by enumerating (dim-1)-subsets of the
// constraints; valid when the cone is pointed.
inline IMat ray_enumeration(const IMat& ineqs, int dim) {
    std::set<IVec> found;
    std::vector<int> idx(ineqs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::vector<int> pick;
    auto consider = [&](const std::vector<int>& s) {
        QMat m;
        for (int i : s) m.push_back(to_qvec(ineqs[i]));
        QMat ker = kernel_basis(m, dim);
        if (ker.size() != 1) return;
        IVec k = primitive_of(ker[0]);
        for (int sign = 0; sign < 2; ++sign) {
            if (sign) k = neg(k);
            bool ok = true;
            for (const IVec& h : ineqs)
                if (dot(h, k) < 0) {
                    ok = false;
                    break;
                }
            if (ok) found.insert(k);
        }
    };
    // all subsets of size dim-1
    std::vector<int> comb(dim - 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == dim - 1) {
            consider(comb);
            return;
        }
        for (int i = start; i < (int)ineqs.size(); ++i) {
            comb[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (dim >= 1) rec(0, 0);
    return IMat(found.begin(), found.end());
}

// random pointed full-dimensional cone with entries in [-box, box]
inline PointedCone random_pointed_cone(std::mt19937& rng, int dim, int nrays, int box) {
    std::uniform_int_distribution<int> d(-box, box);
    while (true) {
        IMat gens;
        for (int i = 0; i < nrays; ++i) {
            IVec v(dim);
            for (int j = 0; j < dim; ++j) v[j] = d(rng);
            if (!is_zero(v)) gens.push_back(v);
        }
        if (gens.empty() || rank(gens) < dim) continue;
        try {
            return PointedCone::from_rays(gens, dim);
        } catch (const hypothesis_error&) {
            continue;  // not pointed, retry
        }
    }
}

// random pointed cone whose rays have positive last coordinate, so the
// height covector is an interior degree
inline PointedCone random_graded_cone(std::mt19937& rng, int dim, int nrays, int box) {
    std::uniform_int_distribution<int> d(-box, box);
    std::uniform_int_distribution<int> h(1, 2);
    while (true) {
        IMat gens;
        for (int i = 0; i < nrays; ++i) {
            IVec v(dim);
            for (int j = 0; j + 1 < dim; ++j) v[j] = d(rng);
            v[dim - 1] = h(rng);
            gens.push_back(v);
        }
        if (rank(gens) < dim) continue;
        try {
            return PointedCone::from_rays(gens, dim);
        } catch (const hypothesis_error&) {
            continue;
        }
    }
}

}  // namespace oracle
