#pragma once

// Directional entropy h(x) = sum over (component, place) of m * max(l_v . x, 0).
// Convex, piecewise linear, positively homogeneous of degree 1.

#include <cmath>
#include <string>
#include <vector>

#include "rankone/counting/count.hpp"

namespace rankone {

struct EntropyTerm {
    long weight;
    std::vector<double> l;
    std::string label;  // "c<component>:<place>"
};

struct EntropyFunction {
    int d = 1;
    std::vector<EntropyTerm> terms;
    bool complete = true;  // false when char-p components were left out

    bool empty() const { return terms.empty(); }
};

/// Char-p components carry no place data and are left out; `complete` records that.
inline EntropyFunction entropy_function(const PreparedAction& a) {
    EntropyFunction ef;
    ef.d = a.d();
    for (std::size_t k = 0; k < a.spec.components.size(); ++k) {
        if (!a.placed[k]) {
            ef.complete = false;
            continue;
        }
        const PlacedComponent& pc = *a.placed[k];
        for (std::size_t v = 0; v < pc.places.size(); ++v) {
            EntropyTerm t;
            t.weight = a.spec.components[k].multiplicity;
            for (const auto& x : pc.lyapunov[v]) t.l.push_back(static_cast<double>(x));
            t.label = "c" + std::to_string(k) + ":" + pc.places[v].label();
            ef.terms.push_back(std::move(t));
        }
    }
    return ef;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double euclidean_norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline double directional_entropy(const EntropyFunction& ef, const std::vector<double>& x) {
    require(static_cast<int>(x.size()) == ef.d, ErrorKind::invalid_input, "direction has the wrong dimension");
    double h = 0;
    for (const auto& t : ef.terms) h += static_cast<double>(t.weight) * std::max(dot(t.l, x), 0.0);
    return h;
}

inline double directional_entropy(const EntropyFunction& ef, const Lattice& n) {
    return directional_entropy(ef, std::vector<double>(n.begin(), n.end()));
}

/// Euclidean Lipschitz bound sum m * |l_v|_2; dominates every cone gradient.
inline double lipschitz_constant(const EntropyFunction& ef) {
    double s = 0;
    for (const auto& t : ef.terms) s += static_cast<double>(t.weight) * euclidean_norm(t.l);
    return s;
}

/// The smallest Euclidean Lipschitz constant: the largest gradient norm over
/// the cones of linearity, i.e. max over term subsets of |sum m l_v|.
inline double lipschitz_constant_exact(const EntropyFunction& ef) {
    const std::size_t r = ef.terms.size();
    require(r <= 24, ErrorKind::resource, "too many entropy terms for subset enumeration");
    double best = 0;
    std::vector<double> s(static_cast<std::size_t>(ef.d));
    for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
        std::fill(s.begin(), s.end(), 0.0);
        for (std::size_t k = 0; k < r; ++k)
            if (mask & (1UL << k))
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += static_cast<double>(ef.terms[k].weight) * ef.terms[k].l[i];
        best = std::max(best, euclidean_norm(s));
    }
    return best;
}

} // namespace rankone
