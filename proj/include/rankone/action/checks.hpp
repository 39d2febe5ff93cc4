#pragma once

// Bounded verification of the standing hypotheses: mixing (xi^n != 1, or
// u^n - 1 outside the ideal, for 0 < |n|_inf <= radius) and entropy rank one
// (finite char-p counts on a probe set). Neither is a proof.

#include <string>
#include <vector>

#include "rankone/counting/count.hpp"

namespace rankone {

struct Violation {
    std::size_t component;
    Lattice n;
    std::string reason;
};

struct MixingReport {
    long verified_up_to_radius = 0;
    std::vector<Violation> violations;
    std::vector<Violation> infinite_counts;  // char p only

    bool ok() const { return violations.empty(); }
};

/// Lattice points with 0 < |n|_inf <= r, one of each +-n pair (first nonzero
/// coordinate positive), in lexicographic order.
inline std::vector<Lattice> half_box(int d, long r) {
    std::vector<Lattice> out;
    Lattice n(static_cast<std::size_t>(d), -r);
    while (true) {
        std::size_t first = 0;
        while (first < n.size() && n[first] == 0) ++first;
        if (first < n.size() && n[first] > 0) out.push_back(n);
        std::size_t k = n.size();
        while (k > 0 && n[k - 1] == r) n[--k] = -r;
        if (k == 0) break;
        ++n[k - 1];
    }
    return out;
}

/// Smallest m <= 30 with x^m = 1, or 0. Roots of unity in fields of degree
/// at most 8 have order at most 30 (phi(m) <= 8).
inline long root_of_unity_order(const NumberField& K, const FieldElement& x) {
    FieldElement acc = x;
    for (long m = 1; m <= 30; ++m) {
        if (K.is_one(acc)) return m;
        acc = K.mul(acc, x);
    }
    return 0;
}

inline MixingReport mixing_check(const PreparedAction& a, long radius, const GroebnerLimits& lim = {}) {
    require(radius >= 1 && radius <= 1000, ErrorKind::resource, "mixing radius must lie in [1, 1000]");
    MixingReport rep;
    rep.verified_up_to_radius = radius;
    const auto points = half_box(a.d(), radius);
    for (std::size_t k = 0; k < a.spec.components.size(); ++k) {
        const auto& entry = a.spec.components[k];
        if (entry.is_char0()) {
            const auto& c = entry.char0();
            for (std::size_t i = 0; i < c.xi.size(); ++i) {
                if (const long m = root_of_unity_order(*c.field, c.xi[i])) {
                    Lattice n(c.xi.size(), 0);
                    n[i] = m;
                    rep.violations.push_back({k, n, "xi_" + std::to_string(i + 1) + " is a root of unity of order " + std::to_string(m)});
                }
            }
            for (const auto& n : points)
                if (c.field->is_one(xi_power(c, n))) rep.violations.push_back({k, n, "xi^n = 1"});
        } else {
            const auto& c = entry.charp();
            const PolyRingFq R(c.q, 2 * c.d);
            const auto G = groebner_basis(R, detail::unit_ideal_generators(R, c), lim);
            for (const auto& n : points) {
                if (charp_contains_binomial(R, G, n)) {
                    rep.violations.push_back({k, n, "u^n - 1 lies in the ideal"});
                    continue;
                }
                if (!charp_dimension(c, n, lim)) rep.infinite_counts.push_back({k, n, "quotient is infinite-dimensional"});
            }
        }
    }
    return rep;
}

struct RankOneComponentReport {
    std::size_t component;
    bool passed;
    std::string note;
};

/// Probe set: e_i, e_i + e_j and e_i - e_j.
inline std::vector<Lattice> rank_one_probes(int d) {
    std::vector<Lattice> out;
    for (int i = 0; i < d; ++i) {
        Lattice e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.push_back(e);
        for (int j = i + 1; j < d; ++j) {
            Lattice p = e, m = e;
            p[static_cast<std::size_t>(j)] = 1;
            m[static_cast<std::size_t>(j)] = -1;
            out.push_back(p);
            out.push_back(m);
        }
    }
    return out;
}

inline std::vector<RankOneComponentReport> entropy_rank_one_check(const PreparedAction& a, const GroebnerLimits& lim = {}) {
    std::vector<RankOneComponentReport> out;
    for (std::size_t k = 0; k < a.spec.components.size(); ++k) {
        const auto& entry = a.spec.components[k];
        if (entry.is_char0()) {
            out.push_back({k, true, "number field component"});
            continue;
        }
        bool passed = true;
        std::string note = "finite counts on the probe set";
        for (const auto& n : rank_one_probes(a.d())) {
            if (!charp_dimension(entry.charp(), n, lim)) {
                passed = false;
                std::string s;
                for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
                note = "infinite count at n = (" + s + ")";
                break;
            }
        }
        out.push_back({k, passed, note});
    }
    return out;
}

} // namespace rankone
