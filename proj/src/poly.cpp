#include "defo/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "defo/linalg.hpp"

namespace defo {

int mono_deg(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_less(const Mono& a, const Mono& b) {
    int da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms.push_back({Mono(nvars, 0), c});
    return p;
}

Poly Poly::monomial(int nvars, const Mono& m, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms.push_back({m, c});
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Mono m(nvars, 0);
    m[i] = 1;
    return monomial(nvars, m, 1);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, mono_deg(m));
    return d;
}

bool Poly::homogeneous() const {
    if (terms.empty()) return true;
    int d = mono_deg(terms[0].first);
    for (const auto& [m, c] : terms)
        if (mono_deg(m) != d) return false;
    return true;
}

const std::pair<Mono, Rat>& Poly::lead() const {
    if (terms.empty()) throw internal_error("lead of zero polynomial");
    return terms.front();
}

Poly Poly::monic() const {
    if (terms.empty()) return *this;
    return scale(1 / terms.front().second, *this);
}

Poly add(const Poly& a, const Poly& b) {
    if (a.nvars != b.nvars) throw internal_error("poly add: ring mismatch");
    Poly r{a.nvars, {}};
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && mono_less(b.terms[j].first, a.terms[i].first))) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || mono_less(a.terms[i].first, b.terms[j].first)) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Rat c = a.terms[i].second + b.terms[j].second;
            if (c != 0) r.terms.push_back({a.terms[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly scale(const Rat& c, const Poly& a) {
    if (c == 0) return Poly::zero(a.nvars);
    Poly r = a;
    for (auto& [m, co] : r.terms) co *= c;
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(-1, b)); }

Poly mul_term(const Poly& a, const Mono& m, const Rat& c) {
    if (c == 0) return Poly::zero(a.nvars);
    Poly r = a;
    for (auto& [mo, co] : r.terms) {
        mo = mono_mul(mo, m);
        co *= c;
    }
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r = Poly::zero(a.nvars);
    for (const auto& [m, c] : b.terms) r = add(r, mul_term(a, m, c));
    return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, int target_nvars) {
    if ((int)images.size() != p.nvars) throw internal_error("substitute: wrong image count");
    std::vector<std::vector<Poly>> powers(p.nvars);
    for (int i = 0; i < p.nvars; ++i) powers[i].push_back(Poly::constant(target_nvars, 1));
    Poly out = Poly::zero(target_nvars);
    for (const auto& [m, c] : p.terms) {
        Poly term = Poly::constant(target_nvars, c);
        for (int i = 0; i < p.nvars; ++i) {
            while ((int)powers[i].size() <= m[i]) powers[i].push_back(mul(powers[i].back(), images[i]));
            if (m[i] > 0) term = mul(term, powers[i][m[i]]);
        }
        out = add(out, term);
    }
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gens) {
    Poly p = f;
    Poly r = Poly::zero(f.nvars);
    while (!p.is_zero()) {
        bool reduced = false;
        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lead().first, p.lead().first)) {
                Mono m = mono_div(p.lead().first, g.lead().first);
                Rat c = p.lead().second / g.lead().second;
                p = sub(p, mul_term(g, m, c));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.terms.push_back(p.lead());
            p.terms.erase(p.terms.begin());
        }
    }
    return r;
}

Poly spoly(const Poly& a, const Poly& b) {
    Mono l = mono_lcm(a.lead().first, b.lead().first);
    Poly pa = mul_term(a, mono_div(l, a.lead().first), 1 / a.lead().second);
    Poly pb = mul_term(b, mono_div(l, b.lead().first), 1 / b.lead().second);
    return sub(pa, pb);
}

std::vector<Poly> buchberger(std::vector<Poly> gens, int max_degree) {
    std::vector<Poly> g;
    for (const Poly& p : gens)
        if (!p.is_zero()) g.push_back(p.monic());
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) pairs.push_back({(int)i, (int)j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Mono &li = g[i].lead().first, &lj = g[j].lead().first;
        Mono l = mono_lcm(li, lj);
        if (max_degree >= 0 && mono_deg(l) > max_degree) continue;
        // coprime leading terms: the S-polynomial reduces to zero
        if (mono_deg(l) == mono_deg(li) + mono_deg(lj)) continue;
        Poly s = normal_form(spoly(g[i], g[j]), g);
        if (s.is_zero()) continue;
        s = s.monic();
        for (size_t k = 0; k < g.size(); ++k) pairs.push_back({(int)k, (int)g.size()});
        g.push_back(s);
    }
    return g;
}

bool ideal_contains(const std::vector<Poly>& gb, const Poly& f) {
    return normal_form(f, gb).is_zero();
}

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> ga = buchberger(a), gb = buchberger(b);
    for (const Poly& p : a)
        if (!ideal_contains(gb, p)) return false;
    for (const Poly& p : b)
        if (!ideal_contains(ga, p)) return false;
    return true;
}

std::vector<Poly> minimalize(std::vector<Poly> gens) {
    std::vector<Poly> kept;
    for (const Poly& p : gens)
        if (!p.is_zero()) kept.push_back(p.monic());
    auto resort = [](std::vector<Poly>& v) {
        std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return mono_less(a.lead().first, b.lead().first);
        });
    };
    resort(kept);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = kept.size(); i-- > 0;) {
            std::vector<Poly> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            if (ideal_contains(buchberger(others), kept[i])) {
                kept.erase(kept.begin() + i);
                changed = true;
            }
        }
    }
    // reduce each generator modulo the ideal of the earlier ones
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> earlier(kept.begin(), kept.begin() + i);
        Poly r = normal_form(kept[i], buchberger(earlier));
        if (!r.is_zero()) kept[i] = r.monic();
    }
    resort(kept);
    return kept;
}

std::vector<Mono> monomials_of_degree(int nvars, int deg) {
    std::vector<Mono> out;
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    Mono cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, deg);
    return out;
}

int graded_piece_dim(const std::vector<Poly>& gens, int k) {
    if (gens.empty()) return 0;
    const int nvars = gens[0].nvars;
    std::vector<Mono> basis = monomials_of_degree(nvars, k);
    std::map<Mono, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;
    QMat rows;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous()) throw internal_error("graded_piece_dim: generator not homogeneous");
        int d = g.degree();
        if (d > k) continue;
        for (const Mono& m : monomials_of_degree(nvars, k - d)) {
            QVec row(basis.size(), Rat(0));
            for (const auto& [mo, c] : g.terms) row[index.at(mono_mul(mo, m))] = c;
            rows.push_back(row);
        }
    }
    return rows.empty() ? 0 : rank(rows);
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) mono << "*";
            mono << names[i];
            if (m[i] > 1) mono << "^" << m[i];
            any = true;
        }
        if (!any) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace defo
