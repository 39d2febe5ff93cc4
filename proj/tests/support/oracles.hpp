#pragma once

// Independent oracles used only by tests. None of these call into the
// routines they are used to check.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

/// Determinant mod q by cofactor expansion (small matrices only).
inline long long det_mod(const std::vector<std::vector<long long>>& m, long long q) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return ((m[0][0] % q) + q) % q;
    long long acc = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        const long long term = (((m[0][col] % q) + q) % q) * det_mod(minor, q) % q;
        acc = (col % 2 == 0) ? (acc + term) % q : (acc - term + q) % q;
    }
    return acc;
}

/// Rank as the largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const std::vector<std::vector<long long>>& a, long long q) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t best = 0;
    const std::size_t kmax = std::min(rows, cols);
    for (std::size_t k = 1; k <= kmax; ++k) {
        bool found = false;
        for (unsigned rmask = 0; rmask < (1U << rows) && !found; ++rmask) {
            if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
            for (unsigned cmask = 0; cmask < (1U << cols) && !found; ++cmask) {
                if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
                std::vector<std::vector<long long>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!(rmask & (1U << r))) continue;
                    std::vector<long long> row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if (cmask & (1U << c)) row.push_back(a[r][c]);
                    sub.push_back(row);
                }
                if (det_mod(sub, q) != 0) found = true;
            }
        }
        if (!found) break;
        best = k;
    }
    return best;
}

/// Periodic points of the x2,x3 action by elementary arithmetic: the numerator
/// of |2^a 3^b - 1| with every factor 2 and 3 removed.
inline mpz_class x2x3_strip_count(long a, long b) {
    mpq_class v(1);
    mpz_class two(2), three(3), p;
    mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(std::labs(a)));
    v *= (a >= 0) ? mpq_class(p) : mpq_class(1, 1) / mpq_class(p);
    mpz_pow_ui(p.get_mpz_t(), three.get_mpz_t(), static_cast<unsigned long>(std::labs(b)));
    v *= (b >= 0) ? mpq_class(p) : mpq_class(1, 1) / mpq_class(p);
    v.canonicalize();
    mpq_class d = v - 1;
    mpz_class num = abs(d.get_num());
    while (num % 2 == 0) num /= 2;
    while (num % 3 == 0) num /= 3;
    return num;
}


/// Ledrappier fixed points of alpha^(m,0), brute force. A fixed point is a
/// bi-infinite sequence of rows r_j in F_2^m with r_{j+1} = r_j + shift(r_j);
/// it exists through r_0 iff r_0 lies in the image of every power of that map,
/// so the count is the size of the eventual image. Rows are bitmasks.
inline unsigned long ledrappier_axis_brute(unsigned m) {
    const unsigned long full = (1UL << m) - 1;
    auto step = [&](unsigned long r) {
        const unsigned long rot = ((r >> 1) | (r << (m - 1))) & full;
        return r ^ rot;
    };
    std::set<unsigned long> cur;
    for (unsigned long r = 0; r <= full; ++r) cur.insert(r);
    while (true) {
        std::set<unsigned long> next;
        for (unsigned long r : cur) next.insert(step(r));
        if (next.size() == cur.size()) return cur.size();
        cur = std::move(next);
    }
}

/// Golden-mean component (theta, 2) with theta^2 = theta + 1: 2 is inert, so
/// the count is |det(A^a 2^b - I)| with every factor 2 removed, A the
/// companion matrix [[0, 1], [1, 1]].
inline mpz_class golden_mean_count(long a, long b) {
    // A^a via Fibonacci numbers: A^k = [[F(k-1), F(k)], [F(k), F(k+1)]], F(-k) = (-1)^(k+1) F(k)
    auto fib = [](long k) {
        mpz_class f;
        const long ak = std::labs(k);
        mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(ak));
        if (k < 0 && ak % 2 == 0) f = -f;
        return f;
    };
    mpq_class s(1);
    mpz_class two(2), p;
    mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(std::labs(b)));
    s = (b >= 0) ? mpq_class(p) : mpq_class(mpz_class(1), p);
    s.canonicalize();
    const mpq_class m00 = s * mpq_class(fib(a - 1)) - 1, m01 = s * mpq_class(fib(a));
    const mpq_class m10 = m01, m11 = s * mpq_class(fib(a + 1)) - 1;
    mpq_class det = m00 * m11 - m01 * m10;
    det.canonicalize();
    mpz_class num = abs(det.get_num());
    while (num % 2 == 0) num /= 2;
    return num;
}

} // namespace oracle
