#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "rankone/algebra/polynomial.hpp"
#include "rankone/algebra/real.hpp"
#include "rankone/algebra/roots.hpp"

namespace rankone {

/// Element of K = Q(theta) in the power basis 1, theta, ..., theta^(deg-1).
struct FieldElement {
    std::vector<BigRational> coords;

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const BigRational& c) { return c == 0; });
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords == b.coords; }
};

/// One complex embedding theta -> root, with a certified inclusion radius.
struct Embedding {
    Complex root;
    Real radius;
    bool is_real = true;
};

/// A numerically evaluated embedding sigma(x) with an absolute error bound.
struct EmbeddedValue {
    Complex value;
    Real error;
};

/// K = Q(theta) for a monic irreducible integer minimal polynomial.
/// Real embeddings come first (descending), then one per complex-conjugate
/// pair (upper half plane, descending real part).
class NumberField {
public:
    static constexpr int default_max_degree = 8;

    const IntPolynomial& min_poly() const { return min_poly_; }
    int degree() const { return min_poly_.degree(); }
    const std::vector<Embedding>& embeddings() const { return embeddings_; }
    int real_embedding_count() const {
        return static_cast<int>(std::count_if(embeddings_.begin(), embeddings_.end(), [](const Embedding& e) { return e.is_real; }));
    }

    FieldElement zero() const { return FieldElement{std::vector<BigRational>(static_cast<std::size_t>(degree()), BigRational(0))}; }
    FieldElement from_rational(const BigRational& v) const {
        FieldElement e = zero();
        e.coords[0] = v;
        return e;
    }
    FieldElement one() const { return from_rational(1); }
    FieldElement theta() const {
        if (degree() == 1) return from_rational(-BigRational(min_poly_.coeff(0)));
        FieldElement e = zero();
        e.coords[1] = 1;
        return e;
    }
    FieldElement from_polynomial(const RatPolynomial& p) const {
        const RatPolynomial r = divmod(p, to_rational(min_poly_)).second;
        FieldElement e = zero();
        for (int i = 0; i <= r.degree(); ++i) e.coords[static_cast<std::size_t>(i)] = r.coeff(i);
        return e;
    }
    RatPolynomial as_polynomial(const FieldElement& x) const { return RatPolynomial(x.coords); }

    bool is_one(const FieldElement& x) const { return x == one(); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    FieldElement scale(const FieldElement& a, const BigRational& s) const {
        FieldElement r = a;
        for (auto& c : r.coords) c *= s;
        return r;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        const std::size_t n = static_cast<std::size_t>(degree());
        std::vector<BigRational> prod(2 * n - 1, BigRational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coords[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.coords[j] != 0) prod[i + j] += a.coords[i] * b.coords[j];
        }
        FieldElement r = zero();
        for (std::size_t i = 0; i < n; ++i) r.coords[i] = prod[i];
        for (std::size_t k = n; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const auto& red = reduction_[k - n];
            for (std::size_t i = 0; i < n; ++i) r.coords[i] += prod[k] * red[i];
        }
        return r;
    }

    /// Exact inverse via the extended Euclidean algorithm against the minimal polynomial.
    FieldElement inv(const FieldElement& x) const {
        require(!x.is_zero(), ErrorKind::domain, "inverse of zero field element");
        RatPolynomial r0 = to_rational(min_poly_), r1 = as_polynomial(x);
        RatPolynomial s0{}, s1 = RatPolynomial::constant(1);
        while (r1.degree() > 0) {
            auto [q, r] = divmod(r0, r1);
            RatPolynomial s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        require(!r1.is_zero(), ErrorKind::consistency, "element not invertible; minimal polynomial reducible");
        return from_polynomial(BigRational(1) / r1.leading() * s1);
    }

    FieldElement pow(const FieldElement& x, long k) const {
        FieldElement base = k < 0 ? inv(x) : x;
        unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
        FieldElement acc = one();
        while (e) {
            if (e & 1UL) acc = mul(acc, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return acc;
    }

    /// N_{K/Q}(x) = Res(min_poly, x(t)).
    BigRational norm(const FieldElement& x) const {
        require(!x.is_zero(), ErrorKind::domain, "norm of zero element");
        if (degree() == 1) return x.coords[0];
        return resultant(to_rational(min_poly_), as_polynomial(x));
    }

    /// sigma_k(x) with a rigorous bound on the error from the root approximation and rounding.
    EmbeddedValue embed(const FieldElement& x, std::size_t k) const {
        const Embedding& e = embeddings_.at(k);
        Complex acc(Real(0));
        Real mag_sum(0), err(0);
        const Real zabs = abs(e.root);
        for (std::size_t j = x.coords.size(); j-- > 0;) {
            acc = acc * e.root + Complex(to_real(x.coords[j]));
            const Real c = boost::multiprecision::abs(to_real(x.coords[j]));
            mag_sum += c * boost::multiprecision::pow(zabs + e.radius, static_cast<int>(j));
            err += c * (boost::multiprecision::pow(zabs + e.radius, static_cast<int>(j)) -
                        boost::multiprecision::pow(zabs, static_cast<int>(j)));
        }
        err += mag_sum * real_epsilon() * (4 * static_cast<int>(x.coords.size()) + 4);
        return {acc, err};
    }

private:
    friend NumberField build_field(const IntPolynomial& min_poly, int max_degree);

    IntPolynomial min_poly_;
    std::vector<Embedding> embeddings_;
    std::vector<std::vector<BigRational>> reduction_;  // theta^(n+k), k = 0..n-2
};

using FieldPtr = std::shared_ptr<const NumberField>;

namespace detail {

inline void build_reduction_table(const IntPolynomial& f, std::vector<std::vector<BigRational>>& table) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    table.clear();
    if (n < 2) return;
    // theta^n = -sum_{i<n} f_i theta^i
    std::vector<BigRational> cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = -BigRational(f.coeff(static_cast<int>(i)));
    table.push_back(cur);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::vector<BigRational> next(n, BigRational(0));
        const BigRational top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < n; ++i) next[i] += top * table[0][i];
        table.push_back(next);
        cur = std::move(next);
    }
}

// Monic integer factor of f whose roots are a subset of the approximations, if any.
inline bool find_integer_factor(const IntPolynomial& f, const std::vector<RootApprox>& roots, IntPolynomial& factor) {
    const int n = f.degree();
    for (int size = 1; size <= n / 2; ++size) {
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            std::vector<Complex> prod{Complex(Real(1))};
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1U << i))) continue;
                std::vector<Complex> next(prod.size() + 1, Complex(Real(0)));
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    next[k + 1] += prod[k];
                    next[k] -= prod[k] * roots[static_cast<std::size_t>(i)].value;
                }
                prod = std::move(next);
            }
            std::vector<BigInt> coeffs;
            bool integral = true;
            for (const auto& c : prod) {
                if (boost::multiprecision::abs(c.im) > Real("1e-20")) {
                    integral = false;
                    break;
                }
                const Real rounded = boost::multiprecision::round(c.re);
                if (boost::multiprecision::abs(c.re - rounded) > Real("1e-20")) {
                    integral = false;
                    break;
                }
                coeffs.push_back(round_to_bigint(rounded));
            }
            if (!integral) continue;
            IntPolynomial cand(std::move(coeffs)), quo;
            if (divides_exactly(f, cand, quo)) {
                factor = cand;
                return true;
            }
        }
    }
    return false;
}

} // namespace detail

/// Builds K = Q(theta). Rejects non-monic input and reducible polynomials
/// (reporting a factor). Irreducibility is decided exactly: every monic
/// integer factor has a subset of the roots as its roots, so all subset
/// products are tried and confirmed by exact division.
inline NumberField build_field(const IntPolynomial& min_poly, int max_degree = NumberField::default_max_degree) {
    require(min_poly.degree() >= 1, ErrorKind::invalid_input, "minimal polynomial must have degree >= 1");
    require(min_poly.leading() == 1, ErrorKind::invalid_input, "minimal polynomial must be monic: " + min_poly.to_string());
    require(min_poly.degree() <= max_degree, ErrorKind::unsupported,
            "field degree " + std::to_string(min_poly.degree()) + " exceeds cap " + std::to_string(max_degree));
    NumberField K;
    K.min_poly_ = min_poly;
    const int n = min_poly.degree();
    if (n >= 2) {
        const RatPolynomial f = to_rational(min_poly);
        const RatPolynomial g = gcd(f, f.derivative());
        if (g.degree() > 0) {
            const auto witness = primitive_part(clear_denominators(g).first);
            fail(ErrorKind::invalid_input, "minimal polynomial " + min_poly.to_string() +
                                               " is reducible (repeated factor " + witness.to_string() + ")");
        }
    }
    const auto roots = complex_roots(to_rational(min_poly));
    if (n >= 2) {
        IntPolynomial factor;
        if (detail::find_integer_factor(min_poly, roots, factor))
            fail(ErrorKind::invalid_input,
                 "minimal polynomial " + min_poly.to_string() + " is reducible (factor " + factor.to_string() + ")");
    }
    std::vector<Embedding> reals, complexes;
    for (const auto& r : roots) {
        if (r.value.im == 0) reals.push_back({r.value, r.radius, true});
        else if (r.value.im > 0) complexes.push_back({r.value, r.radius, false});
    }
    require(static_cast<int>(reals.size() + 2 * complexes.size()) == n, ErrorKind::consistency,
            "embedding count does not match the field degree");
    std::sort(reals.begin(), reals.end(), [](const Embedding& a, const Embedding& b) { return a.root.re > b.root.re; });
    std::sort(complexes.begin(), complexes.end(), [](const Embedding& a, const Embedding& b) {
        return a.root.re != b.root.re ? a.root.re > b.root.re : a.root.im > b.root.im;
    });
    K.embeddings_ = reals;
    K.embeddings_.insert(K.embeddings_.end(), complexes.begin(), complexes.end());
    detail::build_reduction_table(min_poly, K.reduction_);
    return K;
}

} // namespace rankone
