#pragma once

// Action specifications: prime components with multiplicities, read from and
// written to the JSON document format
//
//   { "d": 2, "noetherian": true,
//     "components": [
//       { "multiplicity": 1, "char": 0, "min_poly": [0, 1], "xi": [[2, 1], [3, 1]] },
//       { "multiplicity": 1, "char": 2,
//         "generators": [ { "terms": [ {"exp": [0, 0], "coeff": 1}, ... ] } ] } ] }
//
// Each xi entry lists [num, den] pairs for the power-basis coordinates.
// Integers may be given as JSON numbers or as decimal strings.

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rankone/algebra/prime_field.hpp"
#include "rankone/field/number_field.hpp"

namespace rankone {

using Lattice = std::vector<long>;

/// Laurent polynomial over F_q in d variables.
struct LaurentPolynomial {
    struct Term {
        Lattice exp;
        u64 coeff;
        friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
    };
    std::vector<Term> terms;  // sorted by exponent, coefficients in [1, q)

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms == b.terms; }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (k) os << " + ";
            const auto& t = terms[k];
            bool unit = true;
            for (long e : t.exp) unit = unit && e == 0;
            if (t.coeff != 1 || unit) os << t.coeff;
            for (std::size_t i = 0; i < t.exp.size(); ++i) {
                if (!t.exp[i]) continue;
                os << "u" << i + 1;
                if (t.exp[i] != 1) os << "^" << t.exp[i];
            }
        }
        return os.str();
    }
};

/// Combines like terms and drops zero coefficients.
inline LaurentPolynomial make_laurent(const PrimeField& F, const std::vector<std::pair<Lattice, BigInt>>& raw) {
    std::map<Lattice, u64> acc;
    for (const auto& [e, c] : raw) {
        u64& slot = acc[e];
        slot = F.add(slot, F.reduce(c));
    }
    LaurentPolynomial p;
    for (const auto& [e, c] : acc)
        if (c) p.terms.push_back({e, c});
    return p;
}

struct Char0Component {
    std::shared_ptr<const NumberField> field;
    std::vector<FieldElement> xi;
};

struct CharPComponent {
    u64 q = 2;
    int d = 1;
    std::vector<LaurentPolynomial> generators;
};

using PrimeComponent = std::variant<Char0Component, CharPComponent>;

struct ComponentEntry {
    PrimeComponent component;
    long multiplicity = 1;

    bool is_char0() const { return std::holds_alternative<Char0Component>(component); }
    const Char0Component& char0() const { return std::get<Char0Component>(component); }
    const CharPComponent& charp() const { return std::get<CharPComponent>(component); }
};

struct ActionSpec {
    int d = 1;
    bool noetherian = true;
    std::vector<ComponentEntry> components;
    std::string description;
};

inline constexpr int max_rank = 8;

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void spec_error(const std::string& path, const std::string& msg) {
    fail(ErrorKind::invalid_input, path + ": " + msg);
}

inline BigInt json_bigint(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
        return BigInt(j.get<long>());
    }
    if (j.is_string()) {
        try {
            return parse_bigint(j.get<std::string>());
        } catch (const Error&) {
            spec_error(path, "expected an integer, got \"" + j.get<std::string>() + "\"");
        }
    }
    spec_error(path, "expected an integer");
}

inline long json_small(const json& j, const std::string& path, long lo, long hi) {
    const BigInt v = json_bigint(j, path);
    if (v < lo || v > hi) spec_error(path, "value " + v.get_str() + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v.get_si();
}

inline const json& member(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) spec_error(path, std::string("missing key \"") + key + "\"");
    return *it;
}

inline void allowed_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : keys) ok = ok || it.key() == k;
        if (!ok) spec_error(path, "unknown key \"" + it.key() + "\"");
    }
}

inline json bigint_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

inline Char0Component parse_char0(const json& j, int d, const std::string& path) {
    const json& mp = member(j, "min_poly", path);
    if (!mp.is_array() || mp.empty()) spec_error(path + ".min_poly", "expected a non-empty array of integers");
    std::vector<BigInt> coeffs;
    for (std::size_t i = 0; i < mp.size(); ++i) coeffs.push_back(json_bigint(mp[i], path + ".min_poly[" + std::to_string(i) + "]"));
    const IntPolynomial f(std::move(coeffs));
    Char0Component c;
    try {
        c.field = std::make_shared<const NumberField>(build_field(f));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::invalid_input || e.kind() == ErrorKind::unsupported) spec_error(path + ".min_poly", e.what());
        throw;
    }
    const std::size_t n = static_cast<std::size_t>(c.field->degree());
    const json& xi = member(j, "xi", path);
    if (!xi.is_array()) spec_error(path + ".xi", "expected an array");
    if (xi.size() != static_cast<std::size_t>(d))
        spec_error(path + ".xi", "expected " + std::to_string(d) + " coordinates, got " + std::to_string(xi.size()));
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const std::string p = path + ".xi[" + std::to_string(i) + "]";
        if (!xi[i].is_array() || xi[i].size() != 2 * n)
            spec_error(p, "expected " + std::to_string(2 * n) + " integers ([num, den] per power-basis coordinate)");
        FieldElement e = c.field->zero();
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt num = json_bigint(xi[i][2 * k], p + "[" + std::to_string(2 * k) + "]");
            const BigInt den = json_bigint(xi[i][2 * k + 1], p + "[" + std::to_string(2 * k + 1) + "]");
            if (den == 0) spec_error(p + "[" + std::to_string(2 * k + 1) + "]", "zero denominator");
            e.coords[k] = make_rational(num, den);
        }
        if (e.is_zero()) spec_error(p, "coordinate is zero");
        c.xi.push_back(std::move(e));
    }
    return c;
}

inline CharPComponent parse_charp(const json& j, int d, u64 q, const std::string& path) {
    CharPComponent c;
    c.q = q;
    c.d = d;
    const PrimeField F(q);
    const json& gens = member(j, "generators", path);
    if (!gens.is_array()) spec_error(path + ".generators", "expected an array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string gp = path + ".generators[" + std::to_string(g) + "]";
        if (!gens[g].is_object()) spec_error(gp, "expected an object");
        allowed_keys(gens[g], {"terms"}, gp);
        const json& terms = member(gens[g], "terms", gp);
        if (!terms.is_array()) spec_error(gp + ".terms", "expected an array");
        std::vector<std::pair<Lattice, BigInt>> raw;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = gp + ".terms[" + std::to_string(t) + "]";
            if (!terms[t].is_object()) spec_error(tp, "expected an object");
            allowed_keys(terms[t], {"exp", "coeff"}, tp);
            const json& ex = member(terms[t], "exp", tp);
            if (!ex.is_array() || ex.size() != static_cast<std::size_t>(d))
                spec_error(tp + ".exp", "expected " + std::to_string(d) + " integers");
            Lattice e;
            for (std::size_t i = 0; i < ex.size(); ++i)
                e.push_back(json_small(ex[i], tp + ".exp[" + std::to_string(i) + "]", -1000000, 1000000));
            raw.emplace_back(std::move(e), json_bigint(member(terms[t], "coeff", tp), tp + ".coeff"));
        }
        LaurentPolynomial p = make_laurent(F, raw);
        if (p.is_zero()) spec_error(gp, "generator is zero mod " + std::to_string(q));
        c.generators.push_back(std::move(p));
    }
    return c;
}

} // namespace detail

/// Parses and validates a spec document. Errors are invalid_input with a
/// path-qualified message such as "components[0].xi[1]: coordinate is zero".
inline ActionSpec parse_spec(const nlohmann::json& doc) {
    using detail::spec_error;
    if (!doc.is_object()) spec_error("$", "expected an object");
    detail::allowed_keys(doc, {"d", "noetherian", "components", "description"}, "$");
    ActionSpec spec;
    spec.d = static_cast<int>(detail::json_small(detail::member(doc, "d", "$"), "d", 1, max_rank));
    if (auto it = doc.find("noetherian"); it != doc.end()) {
        if (!it->is_boolean()) spec_error("noetherian", "expected true or false");
        spec.noetherian = it->get<bool>();
    }
    if (auto it = doc.find("description"); it != doc.end()) {
        if (!it->is_string()) spec_error("description", "expected a string");
        spec.description = it->get<std::string>();
    }
    const auto& comps = detail::member(doc, "components", "$");
    if (!comps.is_array() || comps.empty()) spec_error("components", "expected a non-empty array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "components[" + std::to_string(i) + "]";
        const auto& c = comps[i];
        if (!c.is_object()) spec_error(path, "expected an object");
        ComponentEntry entry;
        entry.multiplicity = detail::json_small(detail::member(c, "multiplicity", path), path + ".multiplicity", 1, 1000000);
        const BigInt ch = detail::json_bigint(detail::member(c, "char", path), path + ".char");
        if (ch == 0) {
            detail::allowed_keys(c, {"multiplicity", "char", "min_poly", "xi"}, path);
            entry.component = detail::parse_char0(c, spec.d, path);
        } else {
            if (ch < 2 || ch >= BigInt("4611686018427387904") || !is_probable_prime(ch))
                spec_error(path + ".char", "expected 0 or a prime below 2^62, got " + ch.get_str());
            detail::allowed_keys(c, {"multiplicity", "char", "generators"}, path);
            entry.component = detail::parse_charp(c, spec.d, ch.get_ui(), path);
        }
        spec.components.push_back(std::move(entry));
    }
    return spec;
}

inline ActionSpec parse_spec_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
    }
    return parse_spec(doc);
}

inline ActionSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::invalid_input, "cannot open spec file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

inline nlohmann::json serialize_spec(const ActionSpec& spec) {
    using detail::bigint_json;
    nlohmann::json doc;
    doc["d"] = spec.d;
    doc["noetherian"] = spec.noetherian;
    if (!spec.description.empty()) doc["description"] = spec.description;
    doc["components"] = nlohmann::json::array();
    for (const auto& entry : spec.components) {
        nlohmann::json c;
        c["multiplicity"] = entry.multiplicity;
        if (entry.is_char0()) {
            const auto& cc = entry.char0();
            c["char"] = 0;
            c["min_poly"] = nlohmann::json::array();
            for (const auto& v : cc.field->min_poly().coeffs()) c["min_poly"].push_back(bigint_json(v));
            c["xi"] = nlohmann::json::array();
            for (const auto& x : cc.xi) {
                nlohmann::json flat = nlohmann::json::array();
                for (const auto& r : x.coords) {
                    flat.push_back(bigint_json(r.get_num()));
                    flat.push_back(bigint_json(r.get_den()));
                }
                c["xi"].push_back(std::move(flat));
            }
        } else {
            const auto& cp = entry.charp();
            c["char"] = cp.q;
            c["generators"] = nlohmann::json::array();
            for (const auto& g : cp.generators) {
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& t : g.terms) terms.push_back({{"exp", t.exp}, {"coeff", t.coeff}});
                c["generators"].push_back({{"terms", std::move(terms)}});
            }
        }
        doc["components"].push_back(std::move(c));
    }
    return doc;
}

} // namespace rankone
