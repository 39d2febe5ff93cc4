// rankone: periodic point counts, directional entropy and growth scans for
// entropy-rank-one algebraic Z^d-actions given as JSON action specs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankone/action/checks.hpp"
#include "rankone/entropy/mahler.hpp"
#include "rankone/scan/growth.hpp"

using namespace rankone;

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0) v = 0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num(const Real& v) { return num(static_cast<double>(v)); }

template <class V>
std::string tuple(const V& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        if constexpr (std::is_floating_point_v<typename V::value_type>) s += num(v[i]);
        else s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    require(pos == s.size() && !s.empty(), ErrorKind::invalid_input, what + ": '" + s + "' is not an integer");
    return v;
}

Lattice parse_lattice(const std::string& s) {
    Lattice n;
    for (const auto& part : split(s, ',')) n.push_back(parse_long(part, "--n"));
    require(!n.empty(), ErrorKind::invalid_input, "--n is empty");
    return n;
}

BigRational parse_rational(const std::string& s) {
    BigRational q;
    require(!s.empty() && q.set_str(s, 10) == 0 && q.get_den() != 0, ErrorKind::invalid_input,
            "--poly: '" + s + "' is not an integer or num/den");
    q.canonicalize();
    return q;
}

std::pair<long, long> parse_span(const std::string& s) {
    const auto parts = split(s, ':');
    require(parts.size() == 2, ErrorKind::invalid_input, "--range: expected a:b, got '" + s + "'");
    const long a = parse_long(parts[0], "--range"), b = parse_long(parts[1], "--range");
    require(a <= b, ErrorKind::invalid_input, "--range: empty interval '" + s + "'");
    return {a, b};
}

// terminal columns of a UTF-8 string, one per code point
std::size_t columns(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

int cmd_count(const std::string& spec_path, const std::string& n_text) {
    const auto a = prepare(load_spec(spec_path));
    const Lattice n = parse_lattice(n_text);
    const CountResult r = count_composite(a, n);
    std::cout << r.value.get_str() << "\n";
    if (r.factored) std::cout << "factored: " << r.factored->q << "^" << r.factored->exponent << "\n";
    for (std::size_t k = 0; k < r.per_component.size(); ++k) {
        const auto& c = r.per_component[k];
        std::cout << "component " << k << " (" << (a.spec.components[k].is_char0() ? "char 0" : "char " + std::to_string(a.spec.components[k].charp().q))
                  << ", multiplicity " << c.multiplicity << "): " << c.value.get_str();
        if (c.factored) std::cout << " = " << c.factored->q << "^" << c.factored->exponent;
        std::cout << "\n";
    }
    std::cout << "status: " << (r.upper_bound ? "upper bound (non-Noetherian)" : "exact") << "\n";
    return 0;
}

int cmd_table(const std::string& spec_path, const std::string& range, const std::string& format) {
    const auto a = prepare(load_spec(spec_path));
    require(a.d() == 2, ErrorKind::unsupported, "table needs d = 2");
    const auto parts = split(range, ',');
    require(parts.size() == 2, ErrorKind::invalid_input, "--range: expected a:b,c:d");
    const auto [x0, x1] = parse_span(parts[0]);
    const auto [y0, y1] = parse_span(parts[1]);
    const double cells = static_cast<double>(x1 - x0 + 1) * static_cast<double>(y1 - y0 + 1);
    require(cells <= 10000, ErrorKind::resource, "table has more than 10000 cells");

    const bool csv = format == "csv";
    std::vector<std::vector<std::string>> grid;
    for (long y = y1; y >= y0; --y) {
        std::vector<std::string> row;
        for (long x = x0; x <= x1; ++x)
            row.push_back(x == 0 && y == 0 ? (csv ? "inf" : "∞") : count_composite(a, {x, y}).value.get_str());
        grid.push_back(std::move(row));
    }
    if (csv) {
        std::cout << "n1,n2,count\n";
        for (std::size_t r = 0; r < grid.size(); ++r)
            for (std::size_t c = 0; c < grid[r].size(); ++c)
                std::cout << x0 + static_cast<long>(c) << "," << y1 - static_cast<long>(r) << "," << grid[r][c] << "\n";
        return 0;
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], columns(row[c]));
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) std::cout << ' ';
            std::cout << std::string(width[c] - columns(row[c]), ' ') << row[c];
        }
        std::cout << "\n";
    }
    return 0;
}

ScanRegion parse_region(const std::string& s) {
    if (s == "half") return ScanRegion::half;
    if (s == "upper") return ScanRegion::upper;
    return ScanRegion::full;
}

int cmd_scan(const std::string& spec_path, double rmin, double rmax, const std::string& out, const ScanOptions& opt) {
    const auto a = prepare(load_spec(spec_path));
    const ScanReport rep = shell_scan(a, rmin, rmax, opt);
    if (!out.empty()) {
        std::ofstream f(out);
        require(static_cast<bool>(f), ErrorKind::invalid_input, "cannot write " + out);
        write_scan_csv(f, rep.records, a.d());
    }
    std::cout << "records: " << rep.records.size() << " of " << rep.candidates << (rep.partial ? " (partial: budget reached)" : "") << "\n";
    std::cout << "outer shells: " << rep.outer_shells << "\n";
    std::cout << "C1_estimate: " << num(rep.C1_estimate) << " at " << tuple(rep.argmax) << "\n";
    std::cout << "C2_estimate: " << num(rep.C2_estimate) << " at " << tuple(rep.argmin) << "\n";
    std::cout << "C1_trimmed: " << num(rep.C1_trimmed) << "\n";
    std::cout << "C2_trimmed: " << num(rep.C2_trimmed) << "\n";
    std::cout << "shell,lo,hi,points,min_f,max_f,max_abs_g\n";
    for (std::size_t s = 0; s < rep.shells.size(); ++s) {
        const auto& sh = rep.shells[s];
        std::cout << s << "," << num(sh.lo) << "," << num(sh.hi) << "," << sh.points << ","
                  << (sh.points ? num(sh.min_f) : "nan") << "," << (sh.points ? num(sh.max_f) : "nan") << ","
                  << (sh.points && entropy_function(a).complete ? num(sh.max_abs_g) : "nan") << "\n";
    }
    // growth at powers of two along the coordinate axes
    bool header = false;
    for (const auto& r : rep.records) {
        std::size_t nz = 0, axis = 0;
        for (std::size_t i = 0; i < r.n.size(); ++i)
            if (r.n[i]) {
                ++nz;
                axis = i;
            }
        const long v = std::labs(r.n[axis]);
        if (nz != 1 || (v & (v - 1)) != 0) continue;
        if (!header) {
            std::cout << "axis powers of two: n,f\n";
            header = true;
        }
        std::cout << tuple(r.n) << "," << num(r.f) << "\n";
    }
    return 0;
}

int cmd_extrema(const std::string& spec_path, std::size_t samples) {
    const auto ef = entropy_function(prepare(load_spec(spec_path)));
    if (!ef.complete) std::cout << "note: char-p components carry no places and are left out of h\n";
    const auto e = sphere_extrema(ef);
    std::cout << "max: " << num(e.max_value) << " at " << tuple(e.argmax) << "\n";
    std::cout << "min: " << num(e.min_value) << " at " << tuple(e.argmin) << "\n";
    std::cout << "method: " << e.method << " (" << e.candidates << " candidates)\n";
    std::cout << "lipschitz: " << num(lipschitz_constant_exact(ef)) << " (bound " << num(lipschitz_constant(ef)) << ")\n";
    if (samples) {
        const auto s = sampled_extrema(ef, samples);
        std::cout << "sampled max: " << num(s.max_value) << "\n";
        std::cout << "sampled min: " << num(s.min_value) << "\n";
    }
    return 0;
}

int cmd_nonexpansive(const std::string& spec_path, std::size_t convergents) {
    const auto a = prepare(load_spec(spec_path));
    const auto rep = nonexpansive_candidates(entropy_function(a));
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    if (!rep.available) return 0;
    std::cout << "hyperplanes: " << rep.candidates.size() << "\n";
    for (std::size_t k = 0; k < rep.candidates.size(); ++k) {
        const auto& h = rep.candidates[k];
        std::cout << k << ": normal " << tuple(h.normal) << " places";
        for (const auto& p : h.places) std::cout << " " << p;
        std::cout << "\n";
        if (!convergents || a.d() != 2) continue;
        for (const auto& n : convergent_sequence(h, convergents)) {
            const CountResult c = count_composite(a, n);
            std::cout << "   " << tuple(n) << " count " << c.value.get_str() << " f " << num(log_bigint(c.value) / euclidean_norm(n)) << "\n";
        }
    }
    return 0;
}

int cmd_mahler(const std::string& poly) {
    std::vector<BigRational> q;
    for (const auto& part : split(poly, ',')) q.push_back(parse_rational(part));
    BigInt den = 1;
    for (const auto& c : q) den = rankone::lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> z;
    for (const auto& c : q) z.push_back(BigInt(c * den));
    const MahlerResult m = mahler_measure(IntPolynomial(std::move(z)));
    std::cout << num(m.value - boost::multiprecision::log(to_real(den))) << "\n";
    std::cout << "error bound: " << num(m.error_bound) << "\n";
    return 0;
}

int cmd_oracle_ledrappier(long n) {
    std::cout << ledrappier_axis_closed_form(n).get_str() << "\n";
    return 0;
}

int cmd_oracle_window(const std::string& spec_path, const std::string& n_text, long window) {
    const auto a = prepare(load_spec(spec_path));
    const Lattice n = parse_lattice(n_text);
    int printed = 0;
    for (std::size_t k = 0; k < a.spec.components.size(); ++k) {
        if (a.spec.components[k].is_char0()) continue;
        const auto r = charp_window_oracle(a.spec.components[k].charp(), n, window);
        std::cout << "component " << k << ": dims";
        for (auto d : r.dims) std::cout << " " << d;
        if (r.stabilized) std::cout << " count " << pow_int(BigInt(static_cast<unsigned long>(r.q)), r.exponent).get_str() << "\n";
        else std::cout << " inconclusive (increase --window)\n";
        ++printed;
    }
    require(printed > 0, ErrorKind::unsupported, "no char-p component in the spec");
    return 0;
}

int cmd_validate(const std::string& spec_path, long radius) {
    const auto spec = load_spec(spec_path);
    const auto a = prepare(spec);
    std::cout << "d: " << a.d() << ", components: " << a.spec.components.size() << ", noetherian: " << (a.spec.noetherian ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < a.placed.size(); ++k) {
        if (!a.placed[k]) continue;
        std::cout << "component " << k << " places:";
        for (const auto& p : a.placed[k]->places) std::cout << " " << p.label();
        std::cout << "\n";
    }
    for (const auto& r : entropy_rank_one_check(a))
        std::cout << "component " << r.component << " entropy rank one: " << (r.passed ? "ok" : "FAILED") << " (" << r.note << ")\n";
    const auto m = mixing_check(a, radius);
    for (const auto& v : m.infinite_counts) std::cout << "component " << v.component << " at " << tuple(v.n) << ": " << v.reason << "\n";
    for (const auto& v : m.violations) std::cout << "component " << v.component << " at " << tuple(v.n) << ": " << v.reason << "\n";
    if (!m.ok()) fail(ErrorKind::domain, "action is not mixing");
    std::cout << "mixing: verified for 0 < |n|_inf <= " << m.verified_up_to_radius << "\n";
    return 0;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_input: return 1;
        case ErrorKind::domain:
        case ErrorKind::unsupported: return 2;
        case ErrorKind::resource: return 3;
        case ErrorKind::consistency: return 4;
    }
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic points and directional entropy of entropy-rank-one algebraic Z^d-actions"};
    app.require_subcommand(1);
    std::string spec, n_text, range, format = "ascii", out, region = "half", norm = "euclidean", poly;
    double rmin = 0, rmax = 0;
    std::size_t budget = 1000000, samples = 0, convergents = 0;
    unsigned threads = 0;
    long oracle_n = 0, window = 24, radius = 10;

    auto* count = app.add_subcommand("count", "exact periodic point count at n");
    count->add_option("--spec", spec, "action spec (JSON)")->required();
    count->add_option("--n", n_text, "lattice vector c1,...,cd")->required();

    auto* table = app.add_subcommand("table", "grid of counts for d = 2");
    table->add_option("--spec", spec)->required();
    table->add_option("--range", range, "a:b,c:d for n1 and n2")->required();
    table->add_option("--format", format)->check(CLI::IsMember({"ascii", "csv"}));

    auto* scan = app.add_subcommand("scan", "shell scan of f, h and g");
    scan->add_option("--spec", spec)->required();
    scan->add_option("--rmin", rmin)->required();
    scan->add_option("--rmax", rmax)->required();
    scan->add_option("--out", out, "CSV output file");
    scan->add_option("--region", region)->check(CLI::IsMember({"half", "upper", "full"}));
    scan->add_option("--norm", norm)->check(CLI::IsMember({"euclidean", "sup"}));
    scan->add_option("--budget", budget);
    scan->add_option("--threads", threads);

    auto* extrema = app.add_subcommand("extrema", "extrema of h on the unit sphere");
    extrema->add_option("--spec", spec)->required();
    extrema->add_option("--samples", samples, "also report a sampled estimate");

    auto* nonexp = app.add_subcommand("nonexpansive", "breakpoint hyperplanes of h");
    nonexp->add_option("--spec", spec)->required();
    nonexp->add_option("--convergents", convergents, "lattice points along each line (d = 2)");

    auto* mahler = app.add_subcommand("mahler", "logarithmic Mahler measure");
    mahler->add_option("--poly", poly, "ascending coefficients c0,c1,...")->required();

    auto* oracle = app.add_subcommand("oracle", "independent checks");
    oracle->require_subcommand(1);
    auto* led = oracle->add_subcommand("ledrappier", "closed-form axis count");
    led->add_option("--n", oracle_n)->required();
    auto* win = oracle->add_subcommand("window", "finite-window count for char-p components, d = 2");
    win->add_option("--spec", spec)->required();
    win->add_option("--n", n_text)->required();
    win->add_option("--window", window);

    auto* validate = app.add_subcommand("validate", "parse a spec and check mixing and entropy rank one");
    validate->add_option("--spec", spec)->required();
    validate->add_option("--radius", radius);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*count) return cmd_count(spec, n_text);
        if (*table) return cmd_table(spec, range, format);
        if (*scan) {
            ScanOptions opt;
            opt.region = parse_region(region);
            opt.norm = norm == "sup" ? ScanNorm::sup : ScanNorm::euclidean;
            opt.budget = budget;
            opt.threads = threads;
            return cmd_scan(spec, rmin, rmax, out, opt);
        }
        if (*extrema) return cmd_extrema(spec, samples);
        if (*nonexp) return cmd_nonexpansive(spec, convergents);
        if (*mahler) return cmd_mahler(poly);
        if (*led) return cmd_oracle_ledrappier(oracle_n);
        if (*win) return cmd_oracle_window(spec, n_text, window);
        if (*validate) return cmd_validate(spec, radius);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
