#pragma once

// Places of a number field and their normalised absolute values.
//
// Normalisation (product formula holds):
//   real place      |x|_v = |sigma x|
//   complex place   |x|_v = |sigma x|^2
//   finite place    |x|_v = (p^f)^(-ord_v x)

#include <string>
#include <vector>

#include "rankone/algebra/prime_field.hpp"
#include "rankone/field/number_field.hpp"

namespace rankone {

enum class PlaceKind { archimedean, finite };

struct Place {
    PlaceKind kind = PlaceKind::archimedean;

    // archimedean
    std::size_t embedding = 0;
    int local_degree = 1;  // 1 real, 2 complex

    // finite: the prime ideal (p, generator(theta))
    BigInt p;
    int residue_degree = 1;
    int ramification = 1;
    IntPolynomial generator;
    bool sole_place_above_p = true;
    FieldElement anti_uniformizer;  // ord_v = -1, ord_w >= 0 at the other places above p

    bool is_finite() const { return kind == PlaceKind::finite; }
    BigInt norm() const { return pow_int(p, static_cast<unsigned long>(residue_degree)); }

    std::string label() const {
        if (!is_finite()) return (local_degree == 1 ? "inf_real" : "inf_complex") + std::to_string(embedding + 1);
        std::string s = "v" + p.get_str();
        if (!sole_place_above_p) s += "[" + generator.to_string() + "]";
        return s;
    }
};

inline std::vector<Place> archimedean_places(const NumberField& K) {
    std::vector<Place> out;
    for (std::size_t i = 0; i < K.embeddings().size(); ++i) {
        Place v;
        v.kind = PlaceKind::archimedean;
        v.embedding = i;
        v.local_degree = K.embeddings()[i].is_real ? 1 : 2;
        out.push_back(std::move(v));
    }
    return out;
}

namespace detail {

inline u64 small_prime(const BigInt& p) {
    require(p >= 2 && p < BigInt("4611686018427387904"), ErrorKind::unsupported,
            "prime " + p.get_str() + " too large for finite-place machinery");
    return p.get_ui();
}

/// Dedekind's criterion: Z[theta] is p-maximal iff gcd(F, g, h) = 1 mod p,
/// where g = rad(f mod p), h = (f mod p) / g, F = (g h - f) / p.
inline bool is_p_maximal(const IntPolynomial& f, const BigInt& p,
                         const std::vector<std::pair<FpPoly, int>>& factors, const FpPolyRing& ring) {
    FpPoly g = ring.one(), h = ring.one();
    for (const auto& [gi, ei] : factors) {
        g = ring.mul(g, gi);
        for (int k = 1; k < ei; ++k) h = ring.mul(h, gi);
    }
    const IntPolynomial G = ring.lift(g), H = ring.lift(h);
    const IntPolynomial diff = G * H - f;
    std::vector<BigInt> c;
    for (const auto& v : diff.coeffs()) {
        require(mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0, ErrorKind::consistency,
                "Dedekind lift is not congruent to f mod p");
        c.push_back(v / p);
    }
    const FpPoly F = ring.from_int(IntPolynomial(std::move(c)));
    const FpPoly common = ring.gcd(ring.gcd(F, g), h);
    return common.degree() == 0;
}

// p-integral element -> its reduction in F_p[t] (Z[theta]/p = F_p[t]/(f)).
inline FpPoly reduce_element(const FpPolyRing& ring, const FieldElement& x) {
    return ring.from_rational(RatPolynomial(x.coords));
}

} // namespace detail

/// Finite places above p by Dedekind factorisation of the minimal polynomial
/// mod p. Requires Z[theta] to be p-maximal; otherwise throws unsupported.
inline std::vector<Place> finite_places_above(const NumberField& K, const BigInt& p) {
    require(is_probable_prime(p), ErrorKind::invalid_input, p.get_str() + " is not prime");
    std::vector<Place> out;
    if (K.degree() == 1) {
        Place v;
        v.kind = PlaceKind::finite;
        v.p = p;
        v.generator = IntPolynomial{BigInt(0), BigInt(1)};
        out.push_back(std::move(v));
        return out;
    }
    const u64 q = detail::small_prime(p);
    const FpPolyRing ring(q);
    const IntPolynomial& f = K.min_poly();
    const auto factors = ring.factor(ring.from_int(f));

    const BigInt disc = discriminant(f);
    if (ord_p(disc, p) >= 2 && !detail::is_p_maximal(f, p, factors, ring))
        fail(ErrorKind::unsupported, "Z[theta] is not " + p.get_str() + "-maximal for " + f.to_string() +
                                         "; finite places above this prime are not supported");

    for (std::size_t i = 0; i < factors.size(); ++i) {
        Place v;
        v.kind = PlaceKind::finite;
        v.p = p;
        v.residue_degree = factors[i].first.degree();
        v.ramification = factors[i].second;
        v.generator = ring.lift(factors[i].first);
        v.sole_place_above_p = factors.size() == 1;
        if (!v.sole_place_above_p) {
            // beta = A(theta)/p with A = prod_k G_k^{e_k} / G_i has ord_{P_i}(beta) = -1
            // and ord_{P_j}(beta) >= 0 for j != i.
            IntPolynomial A = IntPolynomial::constant(1);
            for (std::size_t k = 0; k < factors.size(); ++k) {
                const int e = factors[k].second - (k == i ? 1 : 0);
                const IntPolynomial Gk = ring.lift(factors[k].first);
                for (int r = 0; r < e; ++r) A = A * Gk;
            }
            v.anti_uniformizer = K.scale(K.from_polynomial(to_rational(A)), make_rational(1, p));
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Exact valuation of x at a finite place.
inline long ord_v(const NumberField& K, const Place& v, const FieldElement& x) {
    require(v.is_finite(), ErrorKind::invalid_input, "ord_v needs a finite place");
    require(!x.is_zero(), ErrorKind::domain, "valuation of zero is infinite");
    if (K.degree() == 1) return ord_p(x.coords[0], v.p);
    if (v.sole_place_above_p) {
        const long total = ord_p(K.norm(x), v.p);
        require(total % v.residue_degree == 0, ErrorKind::consistency, "norm valuation not divisible by residue degree");
        return total / v.residue_degree;
    }
    // x = p^c * y with y p-integral and not divisible by p.
    long c = 0;
    bool first = true;
    for (const auto& coord : x.coords) {
        if (coord == 0) continue;
        const long o = ord_p(coord, v.p);
        c = first ? o : std::min(c, o);
        first = false;
    }
    FieldElement y = K.scale(x, pow_rational(BigRational(v.p), -c));
    const FpPolyRing ring(detail::small_prime(v.p));
    const FpPoly g = ring.from_int(v.generator);
    const long cap = std::labs(ord_p(K.norm(y), v.p)) / v.residue_degree + 1;
    long k = 0;
    while (ring.mod(detail::reduce_element(ring, y), g).is_zero()) {
        require(k <= cap, ErrorKind::consistency, "valuation loop exceeded the norm bound");
        y = K.mul(y, v.anti_uniformizer);
        ++k;
    }
    return c * v.ramification + k;
}

/// Archimedean |x|_v evaluated numerically, with error bound.
inline EmbeddedValue archimedean_abs(const NumberField& K, const Place& v, const FieldElement& x) {
    const EmbeddedValue s = K.embed(x, v.embedding);
    const Real a = abs(s.value);
    if (v.local_degree == 1) return {Complex(a), s.error};
    return {Complex(a * a), s.error * (2 * a + s.error)};
}

/// Normalised absolute value |x|_v.
inline Real abs_v(const NumberField& K, const Place& v, const FieldElement& x) {
    require(!x.is_zero(), ErrorKind::domain, "absolute value of zero at a place is not used");
    if (v.is_finite()) {
        const long o = ord_v(K, v, x);
        return to_real(pow_rational(BigRational(v.norm()), -o));
    }
    return archimedean_abs(K, v, x).value.re;
}

/// log |x|_v; exact (up to the log itself) at finite places.
inline Real log_abs_v(const NumberField& K, const Place& v, const FieldElement& x) {
    require(!x.is_zero(), ErrorKind::domain, "log of |0|_v");
    if (v.is_finite()) {
        const long o = ord_v(K, v, x);
        return Real(-o * v.residue_degree) * boost::multiprecision::log(to_real(v.p));
    }
    const EmbeddedValue s = K.embed(x, v.embedding);
    return Real(v.local_degree) * boost::multiprecision::log(abs(s.value));
}

} // namespace rankone
