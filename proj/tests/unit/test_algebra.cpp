#include <gtest/gtest.h>

#include <random>

#include "rankone/algebra/integer.hpp"
#include "rankone/algebra/polynomial.hpp"
#include "rankone/algebra/prime_field.hpp"
#include "rankone/algebra/roots.hpp"
#include "support/oracles.hpp"

using namespace rankone;

namespace {

RatPolynomial rp(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) v.emplace_back(x);
    return RatPolynomial(std::move(v));
}

IntPolynomial ip(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

RatPolynomial random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
    std::vector<BigRational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    if (c.back() == 0) c.back() = 1;
    return RatPolynomial(std::move(c));
}

}  // namespace

TEST(Rational, CanonicalForm) {
    const BigRational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), Error);
    EXPECT_EQ(parse_rational("10/-4"), make_rational(-5, 2));
}

TEST(Rational, ProductWithReciprocalIsOne) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng);
        if (a == 0) a = 1;
        if (b == 0) b = -1;
        const BigRational x = make_rational(a, b);
        EXPECT_EQ(x * make_rational(b, a), 1);
    }
}

TEST(Rational, OrdP) {
    EXPECT_EQ(ord_p(make_rational(5, 32), BigInt(2)), -5);
    EXPECT_EQ(ord_p(make_rational(27, 32), BigInt(3)), 3);
    EXPECT_EQ(ord_p(BigRational(10), BigInt(7)), 0);
    EXPECT_THROW(ord_p(BigRational(0), BigInt(2)), Error);
}

TEST(Rational, OrdPIsAdditive) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(1, 5000);
    std::uniform_int_distribution<int> s(0, 1);
    for (int i = 0; i < 300; ++i) {
        const BigRational x = make_rational(d(rng) * (s(rng) ? 1 : -1), d(rng));
        const BigRational y = make_rational(d(rng), d(rng));
        for (long p : {2L, 3L, 5L, 7L}) EXPECT_EQ(ord_p(BigRational(x * y), BigInt(p)), ord_p(x, BigInt(p)) + ord_p(y, BigInt(p)));
    }
}

TEST(Integer, Factorisation) {
    const auto f = factor_integer(BigInt(-360));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, 2);
    EXPECT_EQ(f[0].second, 3);
    EXPECT_EQ(f[2].first, 5);
    // 2^61 - 1 is prime; product with a large-ish prime needs Pollard.
    const BigInt big = BigInt("2305843009213693951") * BigInt(1000003) * BigInt(1000033);
    const auto g = factor_integer(big);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[2].first, BigInt("2305843009213693951"));
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(rp({-2, 1}), rp({-3, 1})), -1);
    EXPECT_EQ(resultant(rp({-1, -1, 1}), rp({-1, 2})), -5);
    EXPECT_EQ(resultant(rp({1, 0, 1}), rp({0, 1})), 1);
    EXPECT_THROW(resultant(RatPolynomial{}, RatPolynomial{}), Error);
}

TEST(Resultant, RationalCoefficients) {
    // Res(t^2 - 2, t/2 - 1/3) = prod over roots of (r/2 - 1/3) = (1/9 - 2/4) = -7/18
    std::vector<BigRational> c{make_rational(-1, 3), make_rational(1, 2)};
    EXPECT_EQ(resultant(rp({-2, 0, 1}), RatPolynomial(c)), make_rational(-7, 18));
}

TEST(Resultant, AntiSymmetry) {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const RatPolynomial f = random_poly(rng, 5), g = random_poly(rng, 5);
        const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
        EXPECT_EQ(resultant(f, g), sign * resultant(g, f));
    }
}

TEST(Resultant, MatchesProductOfRootValues) {
    // Res(f, g) = prod g(r) for monic f with known roots.
    const IntPolynomial f = ip({-1, 1}) * ip({-2, 1}) * ip({3, 1});  // roots 1, 2, -3
    const IntPolynomial g = ip({5, -1, 2});
    BigInt expected = 1;
    for (long r : {1L, 2L, -3L}) expected *= g.evaluate(BigInt(r));
    EXPECT_EQ(resultant(f, g), expected);
}

TEST(Polynomial, SquareFreeDecomposition) {
    // (t-1)^3 (t+2)
    const RatPolynomial p = rp({-1, 1}) * rp({-1, 1}) * rp({-1, 1}) * rp({2, 1});
    const auto sf = squarefree_decomposition(p);
    ASSERT_EQ(sf.size(), 2u);
    EXPECT_EQ(sf[0].first, 1);
    EXPECT_EQ(sf[0].second, rp({2, 1}));
    EXPECT_EQ(sf[1].first, 3);
    EXPECT_EQ(sf[1].second, rp({-1, 1}));
}

TEST(Polynomial, Discriminant) {
    EXPECT_EQ(discriminant(ip({-1, -1, 1})), 5);
    EXPECT_EQ(discriminant(ip({1, 0, 1})), -4);
}

TEST(FqRank, Examples) {
    FqMatrix id(2, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
    EXPECT_EQ(fq_rank(id), 3u);
    EXPECT_EQ(fq_rank(FqMatrix(3, 4, 4)), 0u);
    FqMatrix ones(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.set(i, j, 1);
    EXPECT_EQ(fq_rank(ones), 1u);
}

TEST(FqRank, AgreesWithMinorRank) {
    std::mt19937 rng(99);
    for (long long q : {2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> dim(1, 6);
            const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
            std::uniform_int_distribution<long long> e(0, q - 1);
            std::vector<std::vector<long long>> raw(r, std::vector<long long>(c));
            FqMatrix m(static_cast<u64>(q), r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    // sparse-ish so low ranks appear
                    raw[i][j] = (rng() % 3 == 0) ? e(rng) : 0;
                    m.set(i, j, raw[i][j]);
                }
            EXPECT_EQ(fq_rank(m), oracle::minor_rank(raw, q));
        }
    }
}

TEST(FqNullSpace, VectorsAreAnnihilated) {
    FqMatrix m(5, 2, 4);
    const long long vals[2][4] = {{1, 2, 3, 4}, {2, 4, 1, 0}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.set(i, j, vals[i][j]);
    const auto basis = fq_null_space(m);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis)
        for (std::size_t i = 0; i < 2; ++i) {
            u64 s = 0;
            for (std::size_t j = 0; j < 4; ++j) s = (s + static_cast<u64>(vals[i][j]) * v[j]) % 5;
            EXPECT_EQ(s, 0u);
        }
}

TEST(FpPolynomial, FactorisationRecombines) {
    std::mt19937 rng(5);
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) {
        const FpPolyRing ring(q);
        for (int trial = 0; trial < 40; ++trial) {
            FpPoly f;
            const int deg = 1 + static_cast<int>(rng() % 9);
            for (int i = 0; i < deg; ++i) f.c.push_back(rng() % q);
            f.c.push_back(1);
            const auto fac = ring.factor(f);
            FpPoly prod = ring.one();
            for (const auto& [g, e] : fac) {
                for (int k = 0; k < e; ++k) prod = ring.mul(prod, g);
                // irreducible: no root-free splitting left, checked by x^(q^deg) = x mod g
                const FpPoly xq = ring.powmod(ring.x(), pow_int(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(g.degree())), g);
                EXPECT_EQ(xq, ring.mod(ring.x(), g));
            }
            EXPECT_EQ(prod, f);
        }
    }
}

TEST(FpPolynomial, GoldenMeanModTwoAndFive) {
    const FpPolyRing r2(2), r5(5);
    const auto f2 = r2.factor(r2.from_int(ip({-1, -1, 1})));
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].first.degree(), 2);
    const auto f5 = r5.factor(r5.from_int(ip({-1, -1, 1})));
    ASSERT_EQ(f5.size(), 1u);
    EXPECT_EQ(f5[0].second, 2);
    EXPECT_EQ(f5[0].first, (FpPoly{{2, 1}}));
}

TEST(Roots, GoldenMean) {
    const auto roots = complex_roots(rp({-1, -1, 1}));
    ASSERT_EQ(roots.size(), 2u);
    std::vector<double> re;
    for (const auto& r : roots) {
        EXPECT_EQ(r.value.im, 0);
        EXPECT_LT(r.radius, Real("1e-40"));
        re.push_back(static_cast<double>(r.value.re));
    }
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], (1 - std::sqrt(5.0)) / 2, 1e-15);
    EXPECT_NEAR(re[1], (1 + std::sqrt(5.0)) / 2, 1e-15);
}

TEST(Roots, ComplexPair) {
    const auto roots = complex_roots(rp({1, 0, 1}));
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots) {
        EXPECT_NEAR(static_cast<double>(r.value.re), 0.0, 1e-30);
        EXPECT_NEAR(std::fabs(static_cast<double>(r.value.im)), 1.0, 1e-30);
    }
}
