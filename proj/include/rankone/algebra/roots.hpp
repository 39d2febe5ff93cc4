#pragma once

// Simultaneous root finding (Aberth-Ehrlich) with a posteriori inclusion
// radii. For a square-free p of degree n and an approximation z, the disc
// |w - z| <= n |p(z)| / |p'(z)| contains a root of p.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rankone/algebra/polynomial.hpp"
#include "rankone/algebra/real.hpp"

namespace rankone {

struct RootApprox {
    Complex value;
    Real radius;  // certified inclusion radius
};

namespace detail {

inline std::pair<Complex, Complex> eval_with_derivative(const std::vector<Real>& c, const Complex& z) {
    Complex p(Real(0)), dp(Real(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + Complex(*it);
    }
    return {p, dp};
}

} // namespace detail

/// All complex roots of a square-free rational polynomial of degree >= 1.
/// Roots whose inclusion disc meets the real axis are reported as exactly real;
/// discs are checked to be pairwise disjoint, which makes that sound.
inline std::vector<RootApprox> complex_roots(const RatPolynomial& p) {
    const int n = p.degree();
    require(n >= 1, ErrorKind::invalid_input, "root finding needs degree >= 1");
    std::vector<Real> c;
    for (const auto& v : p.coeffs()) c.push_back(to_real(v));
    const Real lead = c.back();
    for (auto& v : c) v /= lead;

    std::vector<RootApprox> out;
    if (n == 1) {
        out.push_back({Complex(-c[0]), Real(0)});
        return out;
    }

    // Cauchy bound for the initial circle.
    Real bound(0);
    for (int i = 0; i < n; ++i) bound = std::max(bound, Real(boost::multiprecision::abs(c[static_cast<std::size_t>(i)])));
    bound += 1;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (int k = 0; k < n; ++k) {
        const Real ang = two_pi * k / n + Real("0.4");
        z[static_cast<std::size_t>(k)] = Complex(bound * 0.5 * cos(ang), bound * 0.5 * sin(ang));
    }

    const Real tol = real_epsilon() * 64;
    for (int iter = 0; iter < 2000; ++iter) {
        Real max_step(0);
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            auto [pv, dpv] = detail::eval_with_derivative(c, zi);
            if (norm2(pv) == 0) continue;
            const Complex ratio = pv / dpv;
            Complex sum(Real(0));
            for (int j = 0; j < n; ++j)
                if (j != i) sum += Complex(Real(1)) / (zi - z[static_cast<std::size_t>(j)]);
            const Complex step = ratio / (Complex(Real(1)) - ratio * sum);
            zi -= step;
            max_step = std::max(max_step, Real(abs(step) / std::max(Real(1), abs(zi))));
        }
        if (max_step < tol) break;
    }

    for (const auto& zi : z) {
        auto [pv, dpv] = detail::eval_with_derivative(c, zi);
        Real r = abs(dpv) == 0 ? Real(1) : Real(n * abs(pv) / abs(dpv));
        // Allow for rounding in the evaluation itself.
        r += real_epsilon() * 16 * std::max(Real(1), abs(zi));
        out.push_back({zi, r});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            require(abs(out[i].value - out[j].value) > out[i].radius + out[j].radius, ErrorKind::consistency,
                    "root inclusion discs overlap; polynomial not square-free or precision exhausted");
    for (auto& r : out)
        if (boost::multiprecision::abs(r.value.im) <= r.radius) r.value.im = 0;
    return out;
}

} // namespace rankone
