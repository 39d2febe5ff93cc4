#pragma once

// Extrema of h on the unit sphere, and the breakpoint hyperplanes l_v . x = 0.
//
// Max: h(u) = max over term subsets T of (sum_T m l_v) . u, so the sphere
// maximum is max_T |sum_T m l_v|.
// Min: on a pointed cone of linearity h = c . u with c . r_k >= 0 on the
// unit extreme rays r_k, and c . u >= min_k (c . r_k) |u| there. So the
// minimum sits on a ray of the arrangement (d = 2: arc endpoints). If the
// normals do not span R^d, h vanishes on their common null space.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rankone/entropy/entropy.hpp"

namespace rankone {

struct SphereExtrema {
    double max_value = 0;
    double min_value = 0;
    std::vector<double> argmax, argmin;
    std::string method;
    std::size_t candidates = 0;  // arcs (d = 2) or rays (d >= 3) examined
};

namespace detail {

inline std::vector<double> unit(std::vector<double> v) {
    const double n = euclidean_norm(v);
    if (n > 0)
        for (auto& x : v) x /= n;
    return v;
}

inline void sphere_max(const EntropyFunction& ef, SphereExtrema& out) {
    const std::size_t r = ef.terms.size();
    require(r <= 24, ErrorKind::resource, "too many entropy terms for subset enumeration");
    out.max_value = -1;
    std::vector<double> s(static_cast<std::size_t>(ef.d));
    for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
        std::fill(s.begin(), s.end(), 0.0);
        for (std::size_t k = 0; k < r; ++k)
            if (mask & (1UL << k))
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += static_cast<double>(ef.terms[k].weight) * ef.terms[k].l[i];
        const double n = euclidean_norm(s);
        if (n > out.max_value) {
            out.max_value = n;
            out.argmax = s;
        }
    }
    if (out.max_value == 0) {
        out.argmax.assign(static_cast<std::size_t>(ef.d), 0.0);
        out.argmax[0] = 1;
    }
    out.argmax = unit(out.argmax);
}

// Null vector of k = d - 1 rows by generalised cross product (cofactors).
inline std::vector<double> cross(const std::vector<std::vector<double>>& rows, int d) {
    std::vector<double> v(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        // determinant of the rows with column j removed
        std::vector<std::vector<double>> m;
        for (const auto& r : rows) {
            std::vector<double> row;
            for (int c = 0; c < d; ++c)
                if (c != j) row.push_back(r[static_cast<std::size_t>(c)]);
            m.push_back(std::move(row));
        }
        const std::size_t n = m.size();
        double det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
            if (m[piv][c] == 0) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (std::size_t r = c + 1; r < n; ++r) {
                const double f = m[r][c] / m[c][c];
                for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            }
        }
        v[static_cast<std::size_t>(j)] = ((j % 2) ? -1.0 : 1.0) * det;
    }
    return v;
}

inline std::vector<std::vector<double>> distinct_normals(const EntropyFunction& ef) {
    std::vector<std::vector<double>> out;
    for (const auto& t : ef.terms) {
        if (euclidean_norm(t.l) < 1e-12) continue;
        const auto u = unit(t.l);
        bool seen = false;
        for (const auto& o : out) {
            const double c = dot(o, u);
            seen = seen || std::fabs(std::fabs(c) - 1) < 1e-12;
        }
        if (!seen) out.push_back(u);
    }
    return out;
}

inline int rank_of(std::vector<std::vector<double>> m, int d) {
    int rank = 0;
    for (int c = 0; c < d && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        for (std::size_t r = piv; r < m.size(); ++r)
            if (std::fabs(m[r][static_cast<std::size_t>(c)]) > std::fabs(m[piv][static_cast<std::size_t>(c)])) piv = r;
        if (std::fabs(m[piv][static_cast<std::size_t>(c)]) < 1e-10) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            const double f = m[r][static_cast<std::size_t>(c)] / m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
            for (int k = 0; k < d; ++k) m[r][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

inline void consider_min(const EntropyFunction& ef, const std::vector<double>& u, SphereExtrema& out) {
    const double h = directional_entropy(ef, u);
    if (out.argmin.empty() || h < out.min_value) {
        out.min_value = h;
        out.argmin = u;
    }
}

} // namespace detail

inline SphereExtrema sphere_extrema(const EntropyFunction& ef) {
    require(!ef.empty(), ErrorKind::invalid_input, "entropy function has no terms");
    SphereExtrema out;
    detail::sphere_max(ef, out);
    const int d = ef.d;
    if (d == 1) {
        out.method = "endpoints";
        detail::consider_min(ef, {1.0}, out);
        detail::consider_min(ef, {-1.0}, out);
        out.candidates = 2;
        return out;
    }
    if (d == 2) {
        out.method = "arc sweep";
        std::vector<double> cuts;
        for (const auto& t : ef.terms) {
            if (euclidean_norm(t.l) < 1e-300) continue;
            const double a = std::atan2(t.l[1], t.l[0]);
            for (double c : {a + std::numbers::pi / 2, a - std::numbers::pi / 2}) {
                double w = std::fmod(c, 2 * std::numbers::pi);
                if (w < 0) w += 2 * std::numbers::pi;
                cuts.push_back(w);
            }
        }
        std::sort(cuts.begin(), cuts.end());
        if (cuts.empty()) cuts.push_back(0);
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            const double lo = cuts[k];
            const double hi = k + 1 < cuts.size() ? cuts[k + 1] : cuts[0] + 2 * std::numbers::pi;
            detail::consider_min(ef, {std::cos(lo), std::sin(lo)}, out);
            if (hi - lo < 1e-15) continue;
            // on the open arc h = c . (cos t, sin t); the only interior minimum is at -c/|c|
            const double mid = (lo + hi) / 2;
            const std::vector<double> um{std::cos(mid), std::sin(mid)};
            std::vector<double> c(2, 0.0);
            for (const auto& t : ef.terms)
                if (dot(t.l, um) > 0)
                    for (int i = 0; i < 2; ++i) c[static_cast<std::size_t>(i)] += static_cast<double>(t.weight) * t.l[static_cast<std::size_t>(i)];
            if (euclidean_norm(c) > 0) {
                double a = std::atan2(-c[1], -c[0]);
                while (a < lo) a += 2 * std::numbers::pi;
                if (a < hi) detail::consider_min(ef, {std::cos(a), std::sin(a)}, out);
            }
            ++out.candidates;
        }
        return out;
    }
    out.method = "arrangement rays";
    const auto normals = detail::distinct_normals(ef);
    if (detail::rank_of(normals, d) < d) {
        // common null space of all normals: h = 0 there
        // independent normals, completed by coordinate vectors to d - 1 rows
        std::vector<std::vector<double>> rows;
        std::vector<std::vector<double>> pool = normals;
        for (int i = 0; i < d; ++i) {
            std::vector<double> e(static_cast<std::size_t>(d), 0.0);
            e[static_cast<std::size_t>(i)] = 1;
            pool.push_back(e);
        }
        for (const auto& v : pool) {
            if (static_cast<int>(rows.size()) == d - 1) break;
            auto trial = rows;
            trial.push_back(v);
            if (detail::rank_of(trial, d) == static_cast<int>(trial.size())) rows = std::move(trial);
        }
        out.min_value = 0;
        out.argmin = detail::unit(detail::cross(rows, d));
        out.candidates = 1;
        return out;
    }
    const std::size_t r = normals.size();
    const int k = d - 1;
    require(r <= 40, ErrorKind::resource, "too many hyperplanes for ray enumeration");
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::vector<double>> rows;
        for (int i : idx) rows.push_back(normals[static_cast<std::size_t>(i)]);
        const auto v = detail::cross(rows, d);
        if (euclidean_norm(v) > 1e-10) {
            const auto u = detail::unit(v);
            std::vector<double> neg(u);
            for (auto& x : neg) x = -x;
            detail::consider_min(ef, u, out);
            detail::consider_min(ef, neg, out);
            out.candidates += 2;
        }
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == static_cast<int>(r) - k + p) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

/// Sampled extrema over `samples` directions (uniform angles for d = 2,
/// normalised Gaussians otherwise), for cross-checking.
inline SphereExtrema sampled_extrema(const EntropyFunction& ef, std::size_t samples, std::uint64_t seed = 1) {
    require(samples >= 1, ErrorKind::invalid_input, "need at least one sample");
    SphereExtrema out;
    out.method = "sampling";
    out.candidates = samples;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> u(static_cast<std::size_t>(ef.d));
        if (ef.d == 1) {
            u[0] = (s % 2) ? -1.0 : 1.0;
        } else if (ef.d == 2) {
            const double t = 2 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples);
            u = {std::cos(t), std::sin(t)};
        } else {
            for (auto& x : u) x = gauss(rng);
            u = detail::unit(u);
        }
        const double h = directional_entropy(ef, u);
        if (s == 0 || h > out.max_value) {
            out.max_value = h;
            out.argmax = u;
        }
        if (s == 0 || h < out.min_value) {
            out.min_value = h;
            out.argmin = u;
        }
    }
    return out;
}

struct Hyperplane {
    std::vector<double> normal;  // unit normal, first nonzero coordinate positive
    std::vector<std::string> places;
};

struct NonexpansiveReport {
    bool available = true;
    bool complete = true;
    std::string note;
    std::vector<Hyperplane> candidates;
};

/// Breakpoint hyperplanes of h, reported as candidate non-expansive sets.
inline NonexpansiveReport nonexpansive_candidates(const EntropyFunction& ef) {
    NonexpansiveReport rep;
    rep.complete = ef.complete;
    if (ef.empty()) {
        rep.available = false;
        rep.note = "no place data (char-p components only); candidates not available";
        return rep;
    }
    if (!ef.complete) rep.note = "char-p components carry no place data and are not covered";
    if (ef.d < 2) return rep;
    for (const auto& t : ef.terms) {
        if (euclidean_norm(t.l) < 1e-12) continue;
        auto u = detail::unit(t.l);
        std::size_t first = 0;
        while (std::fabs(u[first]) < 1e-15) ++first;
        if (u[first] < 0)
            for (auto& x : u) x = -x;
        bool merged = false;
        for (auto& h : rep.candidates)
            if (std::fabs(dot(h.normal, u) - 1) < 1e-12) {
                h.places.push_back(t.label);
                merged = true;
                break;
            }
        if (!merged) rep.candidates.push_back({u, {t.label}});
    }
    return rep;
}

} // namespace rankone
