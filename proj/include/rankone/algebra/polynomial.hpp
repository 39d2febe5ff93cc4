#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankone/algebra/integer.hpp"

namespace rankone {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Coeff& v) { return Polynomial(std::vector<Coeff>{v}); }
    static Polynomial monomial(const Coeff& v, int degree) {
        std::vector<Coeff> c(static_cast<std::size_t>(degree) + 1, Coeff(0));
        c.back() = v;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Coeff(0);
    }
    const Coeff& leading() const {
        require(!c_.empty(), ErrorKind::invalid_input, "leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Coeff> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Coeff(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Coeff> r = a.c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
        std::vector<Coeff> r = a.c_;
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string(const char* var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Coeff& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            const Coeff mag = v < 0 ? Coeff(-v) : v;
            if (mag != 1 || i == 0) os << mag;
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<BigRational> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

inline BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& v : p.coeffs()) g = gcd(g, v);
    return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> c;
    for (const auto& v : p.coeffs()) c.push_back(v / g);
    return IntPolynomial(std::move(c));
}

/// p = q / den with q integral; den > 0 is the lcm of coefficient denominators.
inline std::pair<IntPolynomial, BigInt> clear_denominators(const RatPolynomial& p) {
    BigInt den = 1;
    for (const auto& v : p.coeffs()) den = lcm(den, v.get_den());
    std::vector<BigInt> c;
    for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (den / v.get_den()));
    return {IntPolynomial(std::move(c)), den};
}

/// Euclidean division over Q.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    require(!b.is_zero(), ErrorKind::invalid_input, "polynomial division by zero");
    std::vector<BigRational> rem = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {RatPolynomial{}, a};
    std::vector<BigRational> quo(static_cast<std::size_t>(dq) + 1, BigRational(0));
    const BigRational lb = b.leading();
    for (int i = dq; i >= 0; --i) {
        const BigRational f = rem[static_cast<std::size_t>(i + db)] / lb;
        quo[static_cast<std::size_t>(i)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return BigRational(1) / p.leading() * p;
}

inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Exact division over Z; returns false if b does not divide a in Z[t].
inline bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& quotient) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero()) return false;
    std::vector<BigInt> c;
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) return false;
        c.push_back(v.get_num());
    }
    quotient = IntPolynomial(std::move(c));
    return true;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r = a.coeffs();
    const int db = b.degree();
    int dr = a.degree();
    int e = a.degree() - db + 1;
    const BigInt lb = b.leading();
    while (dr >= db && dr >= 0) {
        const BigInt lr = r[static_cast<std::size_t>(dr)];
        for (auto& v : r) v *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
        r.pop_back();
        --e;
        dr = static_cast<int>(r.size()) - 1;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
            r.pop_back();
            --dr;
        }
    }
    const BigInt scale = pow_int(lb, static_cast<unsigned long>(std::max(e, 0)));
    for (auto& v : r) v *= scale;
    return IntPolynomial(std::move(r));
}

/// Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r), by the subresultant PRS over Z.
inline BigInt resultant(IntPolynomial a, IntPolynomial b) {
    require(!(a.is_zero() && b.is_zero()), ErrorKind::invalid_input, "resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return 0;
    BigInt sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -1;
        std::swap(a, b);
    }
    if (b.degree() == 0) return sign * pow_int(b.leading(), static_cast<unsigned long>(a.degree()));

    const BigInt ca = content(a), cb = content(b);
    const BigInt t = pow_int(ca, static_cast<unsigned long>(b.degree())) *
                     pow_int(cb, static_cast<unsigned long>(a.degree()));
    {
        std::vector<BigInt> x, y;
        for (const auto& v : a.coeffs()) x.push_back(v / ca);
        for (const auto& v : b.coeffs()) y.push_back(v / cb);
        a = IntPolynomial(std::move(x));
        b = IntPolynomial(std::move(y));
    }
    BigInt g = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        const BigInt divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        std::vector<BigInt> rc;
        for (const auto& v : r.coeffs()) rc.push_back(v / divisor);
        b = IntPolynomial(std::move(rc));
        g = a.leading();
        // h <- h^(1 - delta) * g^delta, exact in Z
        if (delta > 0)
            h = pow_int(g, static_cast<unsigned long>(delta)) / pow_int(h, static_cast<unsigned long>(delta - 1));
        if (b.degree() == 0) break;
    }
    const int da = a.degree();
    const BigInt lb = b.leading();
    h = pow_int(lb, static_cast<unsigned long>(da)) / pow_int(h, static_cast<unsigned long>(da - 1));
    return sign * t * h;
}

/// Resultant over Q, by clearing denominators: Res(F/u, G/w) = Res(F, G) / (u^deg G w^deg F).
inline BigRational resultant(const RatPolynomial& a, const RatPolynomial& b) {
    require(!(a.is_zero() && b.is_zero()), ErrorKind::invalid_input, "resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return 0;
    auto [ia, da] = clear_denominators(a);
    auto [ib, db] = clear_denominators(b);
    const BigInt num = resultant(ia, ib);
    const BigInt den = pow_int(da, static_cast<unsigned long>(b.degree())) * pow_int(db, static_cast<unsigned long>(a.degree()));
    return make_rational(num, den);
}

/// Discriminant of a monic (or general) integer polynomial of degree >= 1.
inline BigInt discriminant(const IntPolynomial& f) {
    const int n = f.degree();
    require(n >= 1, ErrorKind::invalid_input, "discriminant needs degree >= 1");
    BigInt r = resultant(f, f.derivative());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r / f.leading();
}

/// Yun's square-free decomposition over Q: p = c * prod_k s_k^k with s_k monic, square-free, coprime.
/// Returns (multiplicity, factor) pairs for the nonconstant factors.
inline std::vector<std::pair<int, RatPolynomial>> squarefree_decomposition(const RatPolynomial& p) {
    require(!p.is_zero(), ErrorKind::invalid_input, "square-free decomposition of zero");
    std::vector<std::pair<int, RatPolynomial>> out;
    if (p.degree() == 0) return out;
    const RatPolynomial dp = p.derivative();
    RatPolynomial a = gcd(p, dp);
    RatPolynomial b = divmod(p, a).first;
    RatPolynomial c = divmod(dp, a).first;
    RatPolynomial d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        RatPolynomial s = gcd(b, d);
        if (s.degree() > 0) out.emplace_back(k, s);
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
    }
    return out;
}

} // namespace rankone
