#pragma once

// Arithmetic in F_q for prime q < 2^62: matrices (rank, null space) and
// univariate polynomials with full factorisation (square-free split,
// distinct-degree and Cantor-Zassenhaus equal-degree factorisation).

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rankone/algebra/integer.hpp"
#include "rankone/algebra/polynomial.hpp"

namespace rankone {

using u64 = std::uint64_t;

class PrimeField {
public:
    explicit PrimeField(u64 q) : q_(q) {
        require(q >= 2 && q < (u64{1} << 62), ErrorKind::unsupported, "prime field modulus out of range");
        require(is_probable_prime(BigInt(static_cast<unsigned long>(q))), ErrorKind::invalid_input,
                "field size is not prime");
    }

    u64 modulus() const { return q_; }
    u64 reduce(long long v) const {
        const long long m = static_cast<long long>(q_);
        long long r = v % m;
        return static_cast<u64>(r < 0 ? r + m : r);
    }
    u64 reduce(const BigInt& v) const {
        BigInt r = v % BigInt(static_cast<unsigned long>(q_));
        if (r < 0) r += static_cast<unsigned long>(q_);
        return r.get_ui();
    }
    u64 add(u64 a, u64 b) const { const u64 s = a + b; return s >= q_ ? s - q_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q_);
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % q_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        require(a % q_ != 0, ErrorKind::domain, "inverse of zero in F_q");
        return pow(a, q_ - 2);
    }

private:
    u64 q_;
};

/// Dense matrix over F_q, row-major.
class FqMatrix {
public:
    FqMatrix(u64 q, std::size_t rows, std::size_t cols)
        : field_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u64& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { at(r, c) = field_.reduce(v); }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(r, k));
            const u64 inv = field_.inv(at(r, c));
            for (std::size_t k = c; k < cols_; ++k) at(r, k) = field_.mul(at(r, k), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                const u64 f = at(i, c);
                for (std::size_t k = c; k < cols_; ++k)
                    at(i, k) = field_.sub(at(i, k), field_.mul(f, at(r, k)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<u64> a_;
};

/// Rank over F_q by Gaussian elimination.
inline std::size_t fq_rank(FqMatrix m) { return m.row_reduce().size(); }

/// Basis of the right null space {x : A x = 0}, one vector per free column.
inline std::vector<std::vector<u64>> fq_null_space(FqMatrix m) {
    const auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<u64> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.field().neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Univariate polynomial over F_q, ascending coefficients, no trailing zeros.
struct FpPoly {
    std::vector<u64> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
    }
};

/// Polynomial arithmetic over one fixed F_q.
class FpPolyRing {
public:
    explicit FpPolyRing(u64 q) : f_(q) {}
    const PrimeField& field() const { return f_; }

    FpPoly from_int(const IntPolynomial& p) const {
        FpPoly r;
        for (const auto& v : p.coeffs()) r.c.push_back(f_.reduce(v));
        r.trim();
        return r;
    }
    /// Reduction of a p-integral rational polynomial (denominators prime to q).
    FpPoly from_rational(const RatPolynomial& p) const {
        FpPoly r;
        for (const auto& v : p.coeffs())
            r.c.push_back(f_.mul(f_.reduce(BigInt(v.get_num())), f_.inv(f_.reduce(BigInt(v.get_den())))));
        r.trim();
        return r;
    }
    /// Canonical integer lift with coefficients in [0, q).
    IntPolynomial lift(const FpPoly& p) const {
        std::vector<BigInt> c;
        for (auto v : p.c) c.emplace_back(static_cast<unsigned long>(v));
        return IntPolynomial(std::move(c));
    }

    FpPoly one() const { return FpPoly{{1}}; }
    FpPoly x() const { return FpPoly{{0, 1}}; }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f_.add(r.c[i], b.c[i]);
        r.trim();
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f_.sub(r.c[i], b.c[i]);
        r.trim();
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        FpPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f_.add(r.c[i + j], f_.mul(a.c[i], b.c[j]));
        r.trim();
        return r;
    }
    FpPoly scale(const FpPoly& a, u64 s) const {
        FpPoly r = a;
        for (auto& v : r.c) v = f_.mul(v, s);
        r.trim();
        return r;
    }
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
        require(!b.is_zero(), ErrorKind::invalid_input, "division by zero polynomial over F_q");
        FpPoly rem = a, quo;
        if (a.degree() < b.degree()) return {quo, rem};
        quo.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        const u64 inv = f_.inv(b.c.back());
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            const u64 coef = f_.mul(rem.c[static_cast<std::size_t>(i + b.degree())], inv);
            quo.c[static_cast<std::size_t>(i)] = coef;
            if (coef == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) {
                auto& slot = rem.c[static_cast<std::size_t>(i + j)];
                slot = f_.sub(slot, f_.mul(coef, b.c[static_cast<std::size_t>(j)]));
            }
        }
        rem.trim();
        quo.trim();
        return {quo, rem};
    }
    FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
    FpPoly monic(const FpPoly& a) const { return a.is_zero() ? a : scale(a, f_.inv(a.c.back())); }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.is_zero()) {
            FpPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    FpPoly derivative(const FpPoly& a) const {
        FpPoly r;
        for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(f_.mul(a.c[i], f_.reduce(static_cast<long long>(i % f_.modulus()))));
        r.trim();
        return r;
    }
    FpPoly powmod(FpPoly base, BigInt e, const FpPoly& m) const {
        FpPoly r = mod(one(), m);
        base = mod(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base), m);
            base = mod(mul(base, base), m);
            e >>= 1;
        }
        return r;
    }

    /// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
    std::vector<std::pair<FpPoly, int>> factor(const FpPoly& a) const {
        require(a.degree() >= 1, ErrorKind::invalid_input, "factoring a constant over F_q");
        std::vector<std::pair<FpPoly, int>> out;
        for (const auto& [sq, mult] : squarefree(monic(a)))
            for (const auto& [g, d] : distinct_degree(sq))
                for (auto& irr : equal_degree(g, d)) out.emplace_back(std::move(irr), mult);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
            return x.first < y.first;
        });
        return out;
    }

private:
    // Square-free factorisation in characteristic q (handles p-th powers).
    std::vector<std::pair<FpPoly, int>> squarefree(const FpPoly& a) const {
        std::vector<std::pair<FpPoly, int>> out;
        const u64 q = f_.modulus();
        FpPoly da = derivative(a);
        if (da.is_zero()) {
            // a(t) = b(t^q)
            FpPoly b;
            for (std::size_t i = 0; i < a.c.size(); i += q) b.c.push_back(a.c[i]);
            for (auto& [g, m] : squarefree(b)) out.emplace_back(g, m * static_cast<int>(q));
            return out;
        }
        FpPoly c = gcd(a, da);
        FpPoly w = divmod(a, c).first;
        int i = 1;
        while (w.degree() > 0) {
            FpPoly y = gcd(w, c);
            FpPoly fac = divmod(w, y).first;
            if (fac.degree() > 0) out.emplace_back(monic(fac), i);
            w = y;
            c = divmod(c, y).first;
            ++i;
        }
        if (c.degree() > 0) {
            FpPoly b;
            for (std::size_t k = 0; k < c.c.size(); k += q) b.c.push_back(c.c[k]);
            for (auto& [g, m] : squarefree(b)) out.emplace_back(g, m * static_cast<int>(q));
        }
        return out;
    }

    std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly a) const {
        std::vector<std::pair<FpPoly, int>> out;
        const BigInt q(static_cast<unsigned long>(f_.modulus()));
        FpPoly h = x();
        int d = 1;
        while (a.degree() >= 2 * d) {
            h = powmod(h, q, a);
            FpPoly g = gcd(a, sub(h, x()));
            if (g.degree() > 0) {
                out.emplace_back(g, d);
                a = divmod(a, g).first;
                h = mod(h, a);
            }
            ++d;
        }
        if (a.degree() > 0) out.emplace_back(monic(a), a.degree());
        return out;
    }

    std::vector<FpPoly> equal_degree(const FpPoly& a, int d) const {
        if (a.degree() == d) return {monic(a)};
        const u64 q = f_.modulus();
        std::mt19937_64 rng(0x5eed + static_cast<u64>(a.degree()) * 131 + q);
        const BigInt qd = pow_int(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(d));
        for (int attempt = 0; attempt < 10000; ++attempt) {
            FpPoly r;
            for (int i = 0; i < a.degree(); ++i) r.c.push_back(rng() % q);
            r.trim();
            if (r.degree() < 1) continue;
            FpPoly g;
            if (q == 2) {
                // Trace map r + r^2 + ... + r^(2^(d-1)) for characteristic 2.
                FpPoly t = mod(r, a), acc = t;
                for (int i = 1; i < d; ++i) {
                    t = mod(mul(t, t), a);
                    acc = add(acc, t);
                }
                g = gcd(a, acc);
            } else {
                FpPoly s = powmod(r, (qd - 1) / 2, a);
                g = gcd(a, sub(s, one()));
            }
            if (g.degree() > 0 && g.degree() < a.degree()) {
                auto left = equal_degree(g, d);
                auto right = equal_degree(divmod(a, g).first, d);
                left.insert(left.end(), right.begin(), right.end());
                return left;
            }
        }
        fail(ErrorKind::consistency, "equal-degree factorisation did not split");
    }

    PrimeField f_;
};

} // namespace rankone
