#pragma once

// Exact integers and rationals on top of GMP, plus the few number-theoretic
// helpers the rest of the library needs (p-adic order, factorisation).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankone/error.hpp"

namespace rankone {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    require(den != 0, ErrorKind::invalid_input, "rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt parse_bigint(const std::string& text) {
    BigInt v;
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || v.set_str(s, 10) != 0)
        fail(ErrorKind::invalid_input, "not an integer: '" + text + "'");
    return v;
}

/// Accepts "a" or "a/b".
inline BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(parse_bigint(text));
    return make_rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRational pow_rational(const BigRational& base, long e) {
    if (e >= 0) {
        return BigRational(pow_int(base.get_num(), static_cast<unsigned long>(e)),
                           pow_int(base.get_den(), static_cast<unsigned long>(e)));
    }
    require(base != 0, ErrorKind::domain, "negative power of zero");
    return make_rational(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
                         pow_int(base.get_num(), static_cast<unsigned long>(-e)));
}

/// Exponent of p in a nonzero integer.
inline long ord_p(const BigInt& x, const BigInt& p) {
    require(x != 0, ErrorKind::domain, "ord_p of zero is infinite");
    require(p >= 2, ErrorKind::invalid_input, "ord_p needs a prime p >= 2");
    BigInt rest = x;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

/// Exponent of p in the numerator minus exponent in the denominator.
inline long ord_p(const BigRational& x, const BigInt& p) {
    require(x != 0, ErrorKind::domain, "ord_p of zero is infinite");
    if (x.get_den() == 1) return ord_p(x.get_num(), p);
    return ord_p(x.get_num(), p) - ord_p(x.get_den(), p);
}

inline bool is_probable_prime(const BigInt& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Natural log of a positive integer of any size.
inline double log_bigint(const BigInt& x) {
    require(x > 0, ErrorKind::domain, "log of non-positive integer");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

namespace detail {

// Pollard-Brent; returns a nontrivial factor of composite n or 0 on give-up.
inline BigInt pollard_brent(const BigInt& n, unsigned long seed, unsigned long max_iter) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt y = seed % 1000 + 2, c = seed % 997 + 1, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1, iter = 0;
    auto step = [&](BigInt& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        for (unsigned long k = 0; k < r && g == 1; k += m) {
            ys = y;
            for (unsigned long i = 0; i < m && k + i < r; ++i) {
                step(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            iter += m;
            if (iter > max_iter) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

inline void factor_into(const BigInt& n, std::map<BigInt, int>& out, int depth) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    require(depth < 64, ErrorKind::resource, "integer factorisation recursion too deep");
    for (unsigned long seed = 1; seed < 40; ++seed) {
        const BigInt f = pollard_brent(n, seed, 2'000'000);
        if (f != 0 && f != 1 && f != n) {
            factor_into(f, out, depth + 1);
            factor_into(n / f, out, depth + 1);
            return;
        }
    }
    fail(ErrorKind::resource, "could not factor " + n.get_str());
}

} // namespace detail

/// Prime factorisation of |n| (n != 0), primes ascending.
inline std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n) {
    require(n != 0, ErrorKind::invalid_input, "cannot factor zero");
    BigInt rest = abs(n);
    std::map<BigInt, int> found;
    for (unsigned long p = 2; p < 100000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            rest /= p;
        }
    }
    detail::factor_into(rest, found, 0);
    return {found.begin(), found.end()};
}

inline std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> ps;
    for (const auto& [p, e] : factor_integer(n)) ps.push_back(p);
    return ps;
}

} // namespace rankone
