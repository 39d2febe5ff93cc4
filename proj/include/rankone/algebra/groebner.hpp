#pragma once

// Multivariate polynomials over F_q in grevlex order and a Buchberger
// engine with the Gebauer-Moeller pair update. Enough for zero-dimensional
// quotient dimensions and ideal membership at desk scale.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rankone/algebra/prime_field.hpp"

namespace rankone {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

/// Graded reverse lexicographic comparison: true when a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

struct MTerm {
    Monomial exp;
    u64 coeff;
};

/// Sparse polynomial; terms strictly decreasing in grevlex, coefficients nonzero.
struct MPoly {
    std::vector<MTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead() const { return terms.front().exp; }
    u64 lead_coeff() const { return terms.front().coeff; }
};

/// Hard limits for one Groebner computation.
struct GroebnerLimits {
    std::size_t max_basis = 4000;
    std::size_t max_pairs = 200000;
    std::size_t max_terms = 2000000;
    std::size_t max_standard_monomials = 10000000;
};

class PolyRingFq {
public:
    PolyRingFq(u64 q, int nvars) : f_(q), nvars_(nvars) {}

    const PrimeField& field() const { return f_; }
    int nvars() const { return nvars_; }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    MPoly make(std::vector<std::pair<Monomial, long long>> raw) const {
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
        MPoly p;
        for (auto& [m, c] : raw) {
            require(static_cast<int>(m.size()) == nvars_, ErrorKind::invalid_input, "monomial arity mismatch");
            const u64 r = f_.reduce(c);
            if (!p.terms.empty() && p.terms.back().exp == m) {
                p.terms.back().coeff = f_.add(p.terms.back().coeff, r);
                if (p.terms.back().coeff == 0) p.terms.pop_back();
            } else if (r != 0) {
                p.terms.push_back({std::move(m), r});
            }
        }
        return p;
    }

    MPoly monic(MPoly p) const {
        if (p.is_zero()) return p;
        const u64 s = f_.inv(p.lead_coeff());
        for (auto& t : p.terms) t.coeff = f_.mul(t.coeff, s);
        return p;
    }

    /// a - c * x^m * b
    MPoly sub_mul(const MPoly& a, u64 c, const Monomial& m, const MPoly& b) const {
        MPoly r;
        r.terms.reserve(a.terms.size() + b.terms.size());
        std::size_t i = 0, j = 0;
        Monomial shifted(static_cast<std::size_t>(nvars_));
        auto shift = [&](const Monomial& e) {
            for (int k = 0; k < nvars_; ++k) shifted[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + m[static_cast<std::size_t>(k)];
        };
        while (i < a.terms.size() || j < b.terms.size()) {
            if (j < b.terms.size()) shift(b.terms[j].exp);
            if (j >= b.terms.size() || (i < a.terms.size() && grevlex_greater(a.terms[i].exp, shifted))) {
                r.terms.push_back(a.terms[i++]);
            } else if (i >= a.terms.size() || grevlex_greater(shifted, a.terms[i].exp)) {
                r.terms.push_back({shifted, f_.neg(f_.mul(c, b.terms[j].coeff))});
                ++j;
            } else {
                const u64 v = f_.sub(a.terms[i].coeff, f_.mul(c, b.terms[j].coeff));
                if (v) r.terms.push_back({a.terms[i].exp, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Full normal form of p modulo the polynomials of G (any order).
    MPoly normal_form(MPoly p, const std::vector<const MPoly*>& G, std::size_t max_terms) const {
        MPoly rem;
        while (!p.is_zero()) {
            const MTerm& lt = p.terms.front();
            const MPoly* red = nullptr;
            for (const MPoly* g : G)
                if (divides(g->lead(), lt.exp)) {
                    red = g;
                    break;
                }
            if (!red) {
                rem.terms.push_back(lt);
                p.terms.erase(p.terms.begin());
                continue;
            }
            Monomial m(static_cast<std::size_t>(nvars_));
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = lt.exp[k] - red->lead()[k];
            const u64 c = f_.mul(lt.coeff, f_.inv(red->lead_coeff()));
            p = sub_mul(p, c, m, *red);
            require(p.terms.size() + rem.terms.size() <= max_terms, ErrorKind::resource,
                    "Groebner reduction exceeded the term cap");
        }
        return rem;
    }

    MPoly spoly(const MPoly& a, const MPoly& b) const {
        const Monomial l = monomial_lcm(a.lead(), b.lead());
        Monomial ma(l.size()), mb(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) {
            ma[k] = l[k] - a.lead()[k];
            mb[k] = l[k] - b.lead()[k];
        }
        const MPoly am = sub_mul(MPoly{}, f_.neg(f_.inv(a.lead_coeff())), ma, a);
        return sub_mul(am, f_.inv(b.lead_coeff()), mb, b);
    }

private:
    PrimeField f_;
    int nvars_;
};

/// Reduced Groebner basis (monic, sorted by leading monomial) of the ideal
/// generated by gens.
inline std::vector<MPoly> groebner_basis(const PolyRingFq& R, const std::vector<MPoly>& gens,
                                         const GroebnerLimits& lim = {}) {
    std::vector<MPoly> store;
    std::vector<std::size_t> active;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto active_ptrs = [&]() {
        std::vector<const MPoly*> out;
        for (std::size_t k : active) out.push_back(&store[k]);
        return out;
    };

    // Gebauer-Moeller update with a new element h.
    auto update = [&](std::size_t h) {
        const Monomial& lh = store[h].lead();
        std::vector<Pair> C, D;
        for (std::size_t g : active) C.push_back({h, g, monomial_lcm(lh, store[g].lead())});
        while (!C.empty()) {
            Pair p = std::move(C.back());
            C.pop_back();
            bool keep = coprime(lh, store[p.j].lead());
            if (!keep) {
                keep = true;
                for (const auto& o : C)
                    if (divides(o.lcm, p.lcm)) { keep = false; break; }
                if (keep)
                    for (const auto& o : D)
                        if (divides(o.lcm, p.lcm)) { keep = false; break; }
            }
            if (keep) D.push_back(std::move(p));
        }
        std::vector<Pair> next;
        for (auto& p : pairs) {
            const bool drop = divides(lh, p.lcm) && monomial_lcm(store[p.i].lead(), lh) != p.lcm &&
                              monomial_lcm(lh, store[p.j].lead()) != p.lcm;
            if (!drop) next.push_back(std::move(p));
        }
        for (auto& p : D)
            if (!coprime(lh, store[p.j].lead())) next.push_back(std::move(p));
        pairs = std::move(next);
        std::vector<std::size_t> kept;
        for (std::size_t g : active)
            if (!divides(lh, store[g].lead())) kept.push_back(g);
        kept.push_back(h);
        active = std::move(kept);
    };

    auto insert = [&](MPoly p) {
        require(store.size() < lim.max_basis, ErrorKind::resource, "Groebner basis exceeded the size cap");
        store.push_back(R.monic(std::move(p)));
        update(store.size() - 1);
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        MPoly r = R.normal_form(g, active_ptrs(), lim.max_terms);
        if (!r.is_zero()) insert(std::move(r));
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        require(++processed <= lim.max_pairs, ErrorKind::resource, "Groebner computation exceeded the pair cap");
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            const int da = total_degree(a.lcm), db = total_degree(b.lcm);
            return da != db ? da < db : grevlex_greater(b.lcm, a.lcm);
        });
        const Pair p = *it;
        pairs.erase(it);
        MPoly r = R.normal_form(R.spoly(store[p.i], store[p.j]), active_ptrs(), lim.max_terms);
        if (!r.is_zero()) insert(std::move(r));
    }

    // minimal basis, then interreduce tails
    std::vector<MPoly> basis;
    for (std::size_t k : active) basis.push_back(store[k]);
    std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) { return grevlex_greater(b.lead(), a.lead()); });
    std::vector<MPoly> reduced;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<const MPoly*> others;
        for (std::size_t o = 0; o < basis.size(); ++o)
            if (o != k) others.push_back(&basis[o]);
        MTerm lt = basis[k].terms.front();
        MPoly tail;
        tail.terms.assign(basis[k].terms.begin() + 1, basis[k].terms.end());
        MPoly r = R.normal_form(std::move(tail), others, lim.max_terms);
        r.terms.insert(r.terms.begin(), std::move(lt));
        reduced.push_back(std::move(r));
    }
    return reduced;
}

/// True when p lies in the ideal whose Groebner basis is G.
inline bool ideal_contains(const PolyRingFq& R, const std::vector<MPoly>& G, const MPoly& p,
                           const GroebnerLimits& lim = {}) {
    std::vector<const MPoly*> ptrs;
    for (const auto& g : G) ptrs.push_back(&g);
    return R.normal_form(p, ptrs, lim.max_terms).is_zero();
}

/// For a zero-dimensional ideal with basis G: the number of standard
/// monomials, i.e. dim_{F_q} F_q[x]/I. Returns false when the ideal is not
/// zero-dimensional.
inline bool quotient_dimension(const std::vector<MPoly>& G, int nvars, std::uint64_t& dim,
                               const GroebnerLimits& lim = {}) {
    std::vector<Monomial> leads;
    for (const auto& g : G) leads.push_back(g.lead());
    for (const auto& l : leads)
        if (total_degree(l) == 0) {
            dim = 0;
            return true;
        }
    std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
    for (const auto& l : leads) {
        int nz = -1, count = 0;
        for (int i = 0; i < nvars; ++i)
            if (l[static_cast<std::size_t>(i)]) { nz = i; ++count; }
        if (count == 1) {
            int& b = bound[static_cast<std::size_t>(nz)];
            const int e = l[static_cast<std::size_t>(nz)];
            b = b < 0 ? e : std::min(b, e);
        }
    }
    for (int b : bound)
        if (b < 0) return false;

    dim = 0;
    Monomial cur(static_cast<std::size_t>(nvars), 0);
    // depth-first walk of the staircase; a monomial divisible by a leading
    // term prunes every larger exponent in the current variable
    auto walk = [&](auto&& self, int var) -> void {
        if (var == nvars) {
            require(++dim <= lim.max_standard_monomials, ErrorKind::resource, "quotient dimension exceeds the cap");
            return;
        }
        for (int e = 0; e < bound[static_cast<std::size_t>(var)]; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            bool blocked = false;
            for (const auto& l : leads) {
                bool div = true;
                for (int i = 0; i <= var && div; ++i) div = l[static_cast<std::size_t>(i)] <= cur[static_cast<std::size_t>(i)];
                for (int i = var + 1; i < nvars && div; ++i) div = l[static_cast<std::size_t>(i)] == 0;
                if (div) { blocked = true; break; }
            }
            if (blocked) break;
            self(self, var + 1);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    walk(walk, 0);
    return true;
}

} // namespace rankone
