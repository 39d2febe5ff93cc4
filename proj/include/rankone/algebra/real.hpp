#pragma once

// Multiprecision reals (MPFR, 50 decimal digits ~ 166 bits) and a minimal
// complex type over them, used for embeddings and root finding.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "rankone/algebra/integer.hpp"

namespace rankone {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

/// Unit roundoff of Real.
inline Real real_epsilon() { return std::numeric_limits<Real>::epsilon(); }

inline Real to_real(const BigInt& x) { return Real(x.get_str()); }
inline Real to_real(const BigRational& x) { return to_real(x.get_num()) / to_real(x.get_den()); }

/// Nearest integer.
inline BigInt round_to_bigint(const Real& x) {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
    return z;
}

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm2(z)); }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

/// z^k for any integer k (z != 0 when k < 0).
inline Complex pow(const Complex& z, long k) {
    Complex base = k < 0 ? Complex(Real(1)) / z : z;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Complex acc(Real(1));
    while (e) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace rankone
