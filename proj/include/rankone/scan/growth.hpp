#pragma once

// Growth rates f(n) = log|F(alpha^n)| / |n| and the split f(n) = g(n) + h(n/|n|)
// with g(n) = (1/|n|) sum_p m(p) sum_{v in S(p)} log|1 - phi_v(n)|_v,
// phi_v(n) = xi^-n if |xi^n|_v > 1 and xi^n otherwise.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "rankone/entropy/extrema.hpp"

namespace rankone {

inline double euclidean_norm(const Lattice& n) {
    double s = 0;
    for (long v : n) s += static_cast<double>(v) * static_cast<double>(v);
    return std::sqrt(s);
}

inline long sup_norm(const Lattice& n) {
    long s = 0;
    for (long v : n) s = std::max(s, std::labs(v));
    return s;
}

struct PhiValue {
    bool inverted;         // phi = xi^-n
    FieldElement value;    // exact phi
};

/// phi_v(n) for place index `v` of a placed component. The branch test is
/// exact at finite places; at archimedean places it compares l_v . n with 0
/// at working precision (both branches give the same g + h at a tie).
inline PhiValue phi_v(const PlacedComponent& pc, std::size_t v, const Lattice& n) {
    require(!is_zero_vector(n), ErrorKind::domain, "identity direction: infinitely many fixed points");
    const Place& place = pc.places.at(v);
    bool expand;
    if (place.is_finite()) {
        long ord = 0;
        for (std::size_t i = 0; i < n.size(); ++i) ord += n[i] * pc.valuations[v][i];
        expand = ord < 0;
    } else {
        Real s = 0;
        for (std::size_t i = 0; i < n.size(); ++i) s += pc.lyapunov[v][i] * n[i];
        expand = s > 0;
    }
    Lattice m = n;
    if (expand)
        for (auto& x : m) x = -x;
    return {expand, xi_power(pc.component, m)};
}

namespace detail {

// sum_v log|1 - phi_v(n)|_v for one component, at working precision.
inline Real log_place_product(const PlacedComponent& pc, const Lattice& n) {
    const NumberField& K = pc.field();
    Real total = 0;
    for (std::size_t v = 0; v < pc.places.size(); ++v) {
        const Place& place = pc.places[v];
        if (place.is_finite()) {
            const PhiValue phi = phi_v(pc, v, n);
            const FieldElement x = K.sub(K.one(), phi.value);
            require(!x.is_zero(), ErrorKind::domain, "xi^n = 1: the action is not mixing in this direction");
            total += log_abs_v(K, place, x);
            continue;
        }
        // sigma(xi^n) from the embedded coordinates
        Complex z(Real(1));
        for (std::size_t i = 0; i < n.size(); ++i)
            if (n[i]) z *= pow(K.embed(pc.component.xi[i], place.embedding).value, n[i]);
        Real s = 0;
        for (std::size_t i = 0; i < n.size(); ++i) s += pc.lyapunov[v][i] * n[i];
        if (s > 0) z = Complex(Real(1)) / z;
        const Real a = abs(Complex(Real(1)) - z);
        require(a > 0, ErrorKind::domain, "xi^n = 1 at an archimedean place");
        total += Real(place.local_degree) * boost::multiprecision::log(a);
    }
    return total;
}

} // namespace detail

struct PointRecord {
    Lattice n;
    BigInt count;
    double f = 0;
    double h_hat = 0;  // NaN when char-p components are present
    double g = 0;      // NaN when char-p components are present
    bool upper_bound = false;
};

inline constexpr double decomposition_tolerance = 1e-8;

/// Evaluates count, f, h(n/|n|) and g at n; g is computed directly and
/// checked against f - h(n/|n|).
inline PointRecord point_record(const PreparedAction& a, const EntropyFunction& ef, const Lattice& n,
                                const GroebnerLimits& lim = {}) {
    const CountResult c = count_composite(a, n, lim);
    PointRecord r;
    r.n = n;
    r.count = c.value;
    r.upper_bound = c.upper_bound;
    const double norm = euclidean_norm(n);
    r.f = log_bigint(c.value) / norm;
    if (!ef.complete) {
        r.h_hat = r.g = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.h_hat = directional_entropy(ef, n) / norm;
    Real direct = 0;
    for (std::size_t k = 0; k < a.spec.components.size(); ++k)
        direct += Real(a.spec.components[k].multiplicity) * detail::log_place_product(*a.placed[k], n);
    r.g = static_cast<double>(direct) / norm;
    const double other = r.f - r.h_hat;
    if (!(std::fabs(r.g - other) < decomposition_tolerance)) {
        std::string s;
        for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
        fail(ErrorKind::consistency, "g(" + s + ") = " + std::to_string(r.g) + " directly but f - h = " + std::to_string(other));
    }
    return r;
}

inline double f_value(const PreparedAction& a, const Lattice& n) {
    return log_bigint(count_composite(a, n).value) / euclidean_norm(n);
}

inline double g_value(const PreparedAction& a, const EntropyFunction& ef, const Lattice& n) {
    return point_record(a, ef, n).g;
}

enum class ScanRegion { half, upper, full };
enum class ScanNorm { euclidean, sup };

struct ScanOptions {
    ScanRegion region = ScanRegion::half;
    ScanNorm norm = ScanNorm::euclidean;
    std::size_t budget = 1000000;
    unsigned threads = 0;  // 0: RANKONE_THREADS or hardware concurrency
    GroebnerLimits limits;
};

struct ShellSummary {
    double lo = 0, hi = 0;
    std::size_t points = 0;
    double min_f = 0, max_f = 0, max_abs_g = 0;
    Lattice argmin, argmax;
};

struct ScanReport {
    double r_min = 0, r_max = 0;
    std::vector<PointRecord> records;
    std::vector<ShellSummary> shells;
    double C1_estimate = 0, C2_estimate = 0;
    double C1_trimmed = 0, C2_trimmed = 0;
    Lattice argmax, argmin;
    std::size_t outer_shells = 0;
    std::size_t candidates = 0;
    bool partial = false;
};

inline unsigned scan_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("RANKONE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Lattice points selected by a scan, in lexicographic order.
inline std::vector<Lattice> scan_points(int d, double r_min, double r_max, const ScanOptions& opt) {
    const long R = static_cast<long>(std::floor(r_max));
    std::vector<Lattice> out;
    Lattice n(static_cast<std::size_t>(d), -R);
    while (true) {
        bool keep = !is_zero_vector(n);
        if (keep && opt.region != ScanRegion::full) {
            std::size_t last = n.size();
            while (last > 0 && n[last - 1] == 0) --last;
            if (opt.region == ScanRegion::half) keep = n[last - 1] > 0;
            else keep = n.back() >= 0;
        }
        if (keep) {
            const double r = opt.norm == ScanNorm::euclidean ? euclidean_norm(n) : static_cast<double>(sup_norm(n));
            keep = r >= r_min - 1e-12 && r <= r_max + 1e-12;
        }
        if (keep) out.push_back(n);
        std::size_t k = n.size();
        while (k > 0 && n[k - 1] == R) n[--k] = -R;
        if (k == 0) break;
        ++n[k - 1];
    }
    return out;
}

/// Evaluates PointRecords on r_min <= |n| <= r_max and aggregates over unit
/// shells [r_min + k, r_min + k + 1). C1/C2 estimates come from the
/// outermost 20% of shells; the trimmed values drop the single most extreme point.
inline ScanReport shell_scan(const PreparedAction& a, double r_min, double r_max, const ScanOptions& opt = {}) {
    require(r_min > 0 && r_min < r_max, ErrorKind::invalid_input, "need 0 < rmin < rmax");
    require(r_max <= 1e6, ErrorKind::resource, "rmax too large");
    const EntropyFunction ef = entropy_function(a);
    ScanReport rep;
    rep.r_min = r_min;
    rep.r_max = r_max;
    std::vector<Lattice> pts = scan_points(a.d(), r_min, r_max, opt);
    rep.candidates = pts.size();
    if (pts.size() > opt.budget) {
        pts.resize(opt.budget);
        rep.partial = true;
    }

    std::vector<PointRecord> records(pts.size());
    std::vector<std::string> errors(pts.size());
    std::vector<int> kinds(pts.size(), -1);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next++; i < pts.size(); i = next++) {
            try {
                records[i] = point_record(a, ef, pts[i], opt.limits);
            } catch (const Error& e) {
                errors[i] = e.what();
                kinds[i] = static_cast<int>(e.kind());
            }
        }
    };
    const unsigned nt = std::min<unsigned>(scan_threads(opt.threads), static_cast<unsigned>(std::max<std::size_t>(pts.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (kinds[i] >= 0) fail(static_cast<ErrorKind>(kinds[i]), errors[i]);

    const std::size_t nshell = static_cast<std::size_t>(std::max(1.0, std::ceil(r_max - r_min - 1e-12)));
    rep.shells.resize(nshell);
    for (std::size_t s = 0; s < nshell; ++s) {
        rep.shells[s].lo = r_min + static_cast<double>(s);
        rep.shells[s].hi = std::min(r_max, r_min + static_cast<double>(s + 1));
    }
    rep.outer_shells = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(nshell) - 1e-9)));
    std::vector<std::pair<double, std::size_t>> outer;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const double radius = opt.norm == ScanNorm::euclidean ? euclidean_norm(r.n) : static_cast<double>(sup_norm(r.n));
        std::size_t s = radius <= r_min ? 0 : static_cast<std::size_t>(std::floor(radius - r_min));
        s = std::min(s, nshell - 1);
        ShellSummary& sh = rep.shells[s];
        if (sh.points == 0 || r.f < sh.min_f) {
            sh.min_f = r.f;
            sh.argmin = r.n;
        }
        if (sh.points == 0 || r.f > sh.max_f) {
            sh.max_f = r.f;
            sh.argmax = r.n;
        }
        if (!std::isnan(r.g)) sh.max_abs_g = std::max(sh.max_abs_g, std::fabs(r.g));
        ++sh.points;
        if (s + rep.outer_shells >= nshell) outer.emplace_back(r.f, i);
    }
    if (!outer.empty()) {
        std::stable_sort(outer.begin(), outer.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rep.C2_estimate = outer.front().first;
        rep.C1_estimate = outer.back().first;
        rep.argmin = records[outer.front().second].n;
        rep.argmax = records[outer.back().second].n;
        rep.C2_trimmed = outer.size() > 1 ? outer[1].first : outer.front().first;
        rep.C1_trimmed = outer.size() > 1 ? outer[outer.size() - 2].first : outer.back().first;
    }
    rep.records = std::move(records);
    return rep;
}

/// Lattice points along a breakpoint line in d = 2: continued-fraction
/// convergents of its slope (the best approximations), or multiples of the
/// primitive direction when the slope is rational. Points lie in the upper
/// half plane.
inline std::vector<Lattice> convergent_sequence(const Hyperplane& h, std::size_t k) {
    require(h.normal.size() == 2, ErrorKind::unsupported, "convergent sequences need d = 2");
    require(k >= 1 && k <= 12, ErrorKind::invalid_input, "convergent count must lie in [1, 12]");
    double w1 = -h.normal[1], w2 = h.normal[0];
    if (w2 < 0 || (w2 == 0 && w1 < 0)) {
        w1 = -w1;
        w2 = -w2;
    }
    const long s1 = w1 < 0 ? -1 : 1, s2 = w2 < 0 ? -1 : 1;
    const bool wide = std::fabs(w1) >= std::fabs(w2);
    double x = wide ? std::fabs(w2) / std::fabs(w1) : std::fabs(w1) / std::fabs(w2);
    std::vector<Lattice> out;
    auto emit = [&](long p, long q) {
        if (wide) out.push_back({s1 * q, s2 * p});
        else out.push_back({s1 * p, s2 * q});
    };
    // convergents p/q of x in [0, 1]; the leading 0/1 is not a useful point
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    bool rational = false;
    for (int guard = 0; out.size() < k && guard < 64; ++guard) {
        const double a = std::floor(rest);
        const long ai = static_cast<long>(a);
        const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (!(p2 == 0 && q2 == 1)) emit(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = rest - a;
        if (frac < 1e-9) {
            // an exact breakpoint line has a small denominator; otherwise precision ran out
            rational = q1 <= 10000;
            break;
        }
        rest = 1 / frac;
    }
    if (rational) {
        out.clear();
        for (std::size_t j = 1; j <= k; ++j) emit(p1 * static_cast<long>(j), q1 * static_cast<long>(j));
    }
    return out;
}

inline void write_scan_csv(std::ostream& os, const std::vector<PointRecord>& records, int d) {
    for (int i = 0; i < d; ++i) os << "n" << i + 1 << ",";
    os << "count,f,h_hat,g\n";
    auto num = [](double v) {
        if (std::isnan(v)) return std::string("nan");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    for (const auto& r : records) {
        for (long v : r.n) os << v << ",";
        os << r.count.get_str() << "," << num(r.f) << "," << num(r.h_hat) << "," << num(r.g) << "\n";
    }
}

} // namespace rankone
