#pragma once

// Fixed-point counts for char-p components. F(alpha^n) is dual to
// R/(I + <u^n - 1>) with R = F_q[u^{+-1}], so |F| = q^dim. The dimension is
// the number of standard monomials of a zero-dimensional Groebner basis of
//   <generators, u^{n+} - u^{n-}, u_i t_i - 1>
// in F_q[u_1..u_d, t_1..t_d], grevlex.

#include <numeric>
#include <optional>
#include <vector>

#include "rankone/action/spec.hpp"
#include "rankone/algebra/groebner.hpp"

namespace rankone {

namespace detail {

inline MPoly laurent_to_poly(const PolyRingFq& R, const LaurentPolynomial& g, int d) {
    Lattice lo(static_cast<std::size_t>(d), 0);
    for (const auto& t : g.terms)
        for (int i = 0; i < d; ++i) lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], t.exp[static_cast<std::size_t>(i)]);
    std::vector<std::pair<Monomial, long long>> raw;
    for (const auto& t : g.terms) {
        Monomial m(static_cast<std::size_t>(R.nvars()), 0);
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = static_cast<int>(t.exp[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]);
        raw.emplace_back(std::move(m), static_cast<long long>(t.coeff));
    }
    return R.make(std::move(raw));
}

// u^{n+} - u^{n-}, which generates the same ideal as u^n - 1 once the u_i are units.
inline MPoly lattice_binomial(const PolyRingFq& R, const Lattice& n) {
    Monomial plus(static_cast<std::size_t>(R.nvars()), 0), minus = plus;
    for (std::size_t i = 0; i < n.size(); ++i) {
        require(std::labs(n[i]) < 1000000, ErrorKind::resource, "exponent too large for the Groebner engine");
        (n[i] > 0 ? plus : minus)[i] = static_cast<int>(std::labs(n[i]));
    }
    return R.make({{plus, 1}, {minus, -1}});
}

inline std::vector<MPoly> unit_ideal_generators(const PolyRingFq& R, const CharPComponent& c) {
    std::vector<MPoly> gens;
    for (const auto& g : c.generators) gens.push_back(laurent_to_poly(R, g, c.d));
    for (int i = 0; i < c.d; ++i) {
        Monomial ut(static_cast<std::size_t>(R.nvars()), 0), one = ut;
        ut[static_cast<std::size_t>(i)] = 1;
        ut[static_cast<std::size_t>(c.d + i)] = 1;
        gens.push_back(R.make({{ut, 1}, {one, -1}}));
    }
    return gens;
}

} // namespace detail

/// dim_{F_q} R/(I + <u^n - 1>), or nullopt when it is infinite.
inline std::optional<std::uint64_t> charp_dimension(const CharPComponent& c, const Lattice& n,
                                                    const GroebnerLimits& lim = {}) {
    require(static_cast<int>(n.size()) == c.d, ErrorKind::invalid_input, "lattice vector has the wrong dimension");
    require(std::any_of(n.begin(), n.end(), [](long v) { return v != 0; }), ErrorKind::domain,
            "identity direction: infinitely many fixed points");
    const PolyRingFq R(c.q, 2 * c.d);
    auto gens = detail::unit_ideal_generators(R, c);
    gens.push_back(detail::lattice_binomial(R, n));
    const auto G = groebner_basis(R, gens, lim);
    std::uint64_t dim = 0;
    if (!quotient_dimension(G, R.nvars(), dim, lim)) return std::nullopt;
    return dim;
}

/// True when u^n - 1 lies in the ideal with Groebner basis `basis` (built from
/// the component generators and the unit relations).
inline bool charp_contains_binomial(const PolyRingFq& R, const std::vector<MPoly>& basis, const Lattice& n) {
    return ideal_contains(R, basis, detail::lattice_binomial(R, n));
}

/// 2^(n - 2^ord_2(n)), the Ledrappier axis count.
inline BigInt ledrappier_axis_closed_form(long n) {
    require(n >= 1, ErrorKind::invalid_input, "closed form needs n >= 1");
    const long t = n & -n;
    return pow_int(BigInt(2), static_cast<unsigned long>(n - t));
}

struct WindowOracleResult {
    u64 q = 2;
    std::vector<std::size_t> dims;  // for T = window, window + 1, window + 2
    bool stabilized = false;
    std::size_t exponent = 0;       // meaningful when stabilized
};

/// Independent check of the d = 2 char-p count by finite linear algebra.
///
/// A unimodular change of variables sends n to (g, 0), g = gcd(n). Fixed
/// points are then arrays x(i, j), i in Z/g, j in Z, killed by every shift
/// of every generator. On the strip |j| <= T the local solutions form a null
/// space; its restriction to the centre |j| <= T/3 has rank that settles to
/// the dimension of the global solution space.
inline WindowOracleResult charp_window_oracle(const CharPComponent& c, const Lattice& n, long window) {
    require(c.d == 2, ErrorKind::unsupported, "window oracle handles d = 2 only");
    require(n.size() == 2, ErrorKind::invalid_input, "lattice vector has the wrong dimension");
    require(n[0] != 0 || n[1] != 0, ErrorKind::domain, "identity direction: infinitely many fixed points");
    require(window >= 1 && window <= 200, ErrorKind::resource, "window must lie in [1, 200]");
    const long a = n[0], b = n[1];
    long s = 0, t = 0;
    {
        // extended Euclid on (a, b)
        long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const long qt = r0 / r1;
            long tmp = r0 - qt * r1; r0 = r1; r1 = tmp;
            tmp = s0 - qt * s1; s0 = s1; s1 = tmp;
            tmp = t0 - qt * t1; t0 = t1; t1 = tmp;
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        s = s0;
        t = t0;
        require(r0 == std::gcd(a, b), ErrorKind::consistency, "extended Euclid failed");
    }
    const long g = std::gcd(a, b);
    require(g <= 64, ErrorKind::resource, "window oracle supports gcd(n) <= 64");
    // new coordinates: c1 = s m1 + t m2 (mod g), c2 = -(b/g) m1 + (a/g) m2
    struct Shifted {
        long c1, c2;
        u64 coeff;
    };
    std::vector<std::vector<Shifted>> gens;
    for (const auto& gen : c.generators) {
        std::vector<Shifted> terms;
        for (const auto& term : gen.terms) {
            const long m1 = term.exp[0], m2 = term.exp[1];
            terms.push_back({((s * m1 + t * m2) % g + g) % g, -(b / g) * m1 + (a / g) * m2, term.coeff});
        }
        gens.push_back(std::move(terms));
    }

    WindowOracleResult res;
    res.q = c.q;
    for (long T = window; T <= window + 2; ++T) {
        const long width = 2 * T + 1;
        const auto col = [&](long i, long j) { return static_cast<std::size_t>(((j + T) * g) + i); };
        std::vector<std::vector<std::pair<std::size_t, u64>>> rows;
        for (const auto& terms : gens) {
            long lo = terms.front().c2, hi = lo;
            for (const auto& tm : terms) {
                lo = std::min(lo, tm.c2);
                hi = std::max(hi, tm.c2);
            }
            // shift (r, j0): every term lands at (c1 + r mod g, c2 + j0) inside the strip
            for (long j0 = -T - lo; j0 + hi <= T; ++j0)
                for (long r = 0; r < g; ++r) {
                    std::vector<std::pair<std::size_t, u64>> row;
                    for (const auto& tm : terms) row.emplace_back(col((tm.c1 + r) % g, tm.c2 + j0), tm.coeff);
                    rows.push_back(std::move(row));
                }
        }
        const std::size_t ncols = static_cast<std::size_t>(width * g);
        FqMatrix A(c.q, std::max<std::size_t>(rows.size(), 1), ncols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [cidx, v] : rows[r]) A.at(r, cidx) = A.field().add(A.at(r, cidx), v);
        const auto kernel = fq_null_space(A);
        const long centre = T / 3;
        const std::size_t ccols = static_cast<std::size_t>((2 * centre + 1) * g);
        FqMatrix K(c.q, std::max<std::size_t>(kernel.size(), 1), ccols);
        for (std::size_t r = 0; r < kernel.size(); ++r)
            for (long j = -centre; j <= centre; ++j)
                for (long i = 0; i < g; ++i)
                    K.at(r, static_cast<std::size_t>((j + centre) * g + i)) = kernel[r][col(i, j)];
        res.dims.push_back(kernel.empty() ? 0 : fq_rank(K));
    }
    res.stabilized = res.dims[0] == res.dims[1] && res.dims[1] == res.dims[2];
    res.exponent = res.dims.back();
    return res;
}

} // namespace rankone
