#pragma once

// Logarithmic Mahler measure m(P) = log|lc P| + sum over roots of log max(1, |rho|),
// from certified root approximations of the square-free parts of P.

#include "rankone/algebra/polynomial.hpp"
#include "rankone/algebra/roots.hpp"

namespace rankone {

struct MahlerResult {
    Real value;
    Real error_bound;
};

inline MahlerResult mahler_measure(const IntPolynomial& P) {
    require(!P.is_zero(), ErrorKind::invalid_input, "Mahler measure of the zero polynomial");
    MahlerResult r;
    r.value = boost::multiprecision::log(to_real(BigInt(abs(P.leading()))));
    r.error_bound = 0;
    if (P.degree() == 0) return r;
    // log max(1, x) is 1-Lipschitz, so a root radius bounds its contribution error
    for (const auto& [mult, factor] : squarefree_decomposition(to_rational(P))) {
        if (factor.degree() < 1) continue;
        for (const auto& root : complex_roots(factor)) {
            const Real a = abs(root.value);
            if (a > 1) r.value += mult * boost::multiprecision::log(a);
            r.error_bound += mult * (root.radius + a * real_epsilon() * 8);
        }
    }
    return r;
}

/// Entropy of the Z-action defined by P (d = 1).
inline MahlerResult entropy_d1_yuzvinskii(const IntPolynomial& P) { return mahler_measure(P); }

} // namespace rankone
