#pragma once

// Exact periodic-point counts.
//
// char 0:  |F(alpha^n)| = prod_{v in S} |xi^n - 1|_v
//                       = |N(xi^n - 1)| * prod_{finite v in S} Nv^(-ord_v(xi^n - 1))
// char p:  |F(alpha^n)| = q^dim (see charp.hpp)
// composite: prod over components of count^multiplicity; an upper bound only
// when the module is not Noetherian.

#include <optional>
#include <utility>
#include <vector>

#include "rankone/action/placed.hpp"
#include "rankone/counting/charp.hpp"

namespace rankone {

struct PrimePower {
    u64 q;
    std::uint64_t exponent;
};

struct ComponentCount {
    BigInt value;
    long multiplicity = 1;
    std::optional<PrimePower> factored;
};

struct CountResult {
    BigInt value;
    std::optional<PrimePower> factored;
    std::vector<ComponentCount> per_component;
    bool upper_bound = false;
};

inline bool is_zero_vector(const Lattice& n) {
    return std::all_of(n.begin(), n.end(), [](long v) { return v == 0; });
}

/// xi^n in K, negative exponents through exact inversion.
inline FieldElement xi_power(const Char0Component& c, const Lattice& n) {
    const NumberField& K = *c.field;
    FieldElement acc = K.one();
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i]) acc = K.mul(acc, K.pow(c.xi[i], n[i]));
    return acc;
}

inline CountResult count_prime_char0(const PlacedComponent& pc, const Lattice& n) {
    require(static_cast<int>(n.size()) == pc.d(), ErrorKind::invalid_input, "lattice vector has the wrong dimension");
    require(!is_zero_vector(n), ErrorKind::domain, "identity direction: infinitely many fixed points");
    const NumberField& K = pc.field();
    const FieldElement x = K.sub(xi_power(pc.component, n), K.one());
    require(!x.is_zero(), ErrorKind::domain, "xi^n = 1: the action is not mixing in this direction");
    BigRational value = abs(K.norm(x));
    for (const auto& v : pc.places) {
        if (!v.is_finite()) continue;
        value *= pow_rational(BigRational(v.norm()), -ord_v(K, v, x));
    }
    value.canonicalize();
    require(value.get_den() == 1, ErrorKind::consistency,
            "place product is not an integer (" + value.get_str() + "); normalisation or place set is wrong");
    require(value >= 1, ErrorKind::consistency, "place product is below 1");
    CountResult r;
    r.value = value.get_num();
    r.per_component.push_back({r.value, 1, std::nullopt});
    return r;
}

inline CountResult count_prime_charp(const CharPComponent& c, const Lattice& n, const GroebnerLimits& lim = {}) {
    const auto dim = charp_dimension(c, n, lim);
    if (!dim) {
        std::string s;
        for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
        fail(ErrorKind::domain, "infinitely many fixed points at n = (" + s + "); entropy rank one fails here");
    }
    CountResult r;
    r.value = pow_int(BigInt(static_cast<unsigned long>(c.q)), *dim);
    r.factored = PrimePower{c.q, *dim};
    r.per_component.push_back({r.value, 1, r.factored});
    return r;
}

/// A spec together with the place data of its char-0 components.
struct PreparedAction {
    ActionSpec spec;
    std::vector<std::optional<PlacedComponent>> placed;  // index-aligned with spec.components

    int d() const { return spec.d; }
    bool has_charp() const {
        for (const auto& c : spec.components)
            if (!c.is_char0()) return true;
        return false;
    }
};

inline PreparedAction prepare(ActionSpec spec) {
    PreparedAction a;
    for (const auto& c : spec.components) {
        if (c.is_char0()) a.placed.emplace_back(compute_places(c.char0()));
        else a.placed.emplace_back(std::nullopt);
    }
    a.spec = std::move(spec);
    return a;
}

inline CountResult count_composite(const PreparedAction& a, const Lattice& n, const GroebnerLimits& lim = {}) {
    require(static_cast<int>(n.size()) == a.d(), ErrorKind::invalid_input,
            "lattice vector needs " + std::to_string(a.d()) + " coordinates");
    require(!is_zero_vector(n), ErrorKind::domain, "identity direction: infinitely many fixed points");
    CountResult r;
    r.value = 1;
    r.upper_bound = !a.spec.noetherian;
    std::optional<PrimePower> pure;
    bool all_same_prime = true;
    for (std::size_t k = 0; k < a.spec.components.size(); ++k) {
        const auto& entry = a.spec.components[k];
        const CountResult one = entry.is_char0() ? count_prime_char0(*a.placed[k], n) : count_prime_charp(entry.charp(), n, lim);
        ComponentCount cc{one.value, entry.multiplicity, one.factored};
        r.value *= pow_int(one.value, static_cast<unsigned long>(entry.multiplicity));
        if (one.factored && (!pure || pure->q == one.factored->q)) {
            const std::uint64_t e = one.factored->exponent * static_cast<std::uint64_t>(entry.multiplicity);
            pure = PrimePower{one.factored->q, (pure ? pure->exponent : 0) + e};
        } else if (one.value != 1) {
            all_same_prime = false;
        }
        r.per_component.push_back(std::move(cc));
    }
    if (all_same_prime && pure) r.factored = pure;
    return r;
}

} // namespace rankone
