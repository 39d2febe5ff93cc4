#pragma once

// The place set S of a char-0 component and its Lyapunov vectors
// l_v = (log|xi_1|_v, ..., log|xi_d|_v).
//
// S holds every archimedean place and every finite place where some xi_i is
// not a unit. Candidate primes are those dividing the common denominator D of
// xi_i or the norm of D * xi_i; any place with ord_v(xi_i) != 0 lies above one
// of them.

#include <set>
#include <vector>

#include "rankone/action/spec.hpp"
#include "rankone/field/places.hpp"

namespace rankone {

struct PlacedComponent {
    Char0Component component;
    std::vector<Place> places;
    std::vector<std::vector<Real>> lyapunov;           // [place][coordinate]
    std::vector<std::vector<long>> valuations;         // ord_v(xi_i) at finite places, empty row otherwise

    const NumberField& field() const { return *component.field; }
    int d() const { return static_cast<int>(component.xi.size()); }
};

inline std::vector<BigInt> candidate_primes(const NumberField& K, const FieldElement& x) {
    std::set<BigInt> primes;
    BigInt den = 1;
    for (const auto& c : x.coords) den = lcm(den, c.get_den());
    for (const auto& p : prime_divisors(den)) primes.insert(p);
    const BigRational n = K.norm(K.scale(x, BigRational(den)));
    require(n.get_den() == 1, ErrorKind::consistency, "norm of an integral element is not an integer");
    for (const auto& p : prime_divisors(abs(n.get_num()))) primes.insert(p);
    return {primes.begin(), primes.end()};
}

inline PlacedComponent compute_places(const Char0Component& c) {
    const NumberField& K = *c.field;
    PlacedComponent pc;
    pc.component = c;
    for (auto& v : archimedean_places(K)) pc.places.push_back(std::move(v));

    std::set<BigInt> primes;
    for (const auto& x : c.xi)
        for (const auto& p : candidate_primes(K, x)) primes.insert(p);
    for (const auto& p : primes) {
        for (auto& v : finite_places_above(K, p)) {
            std::vector<long> ords;
            bool support = false;
            for (const auto& x : c.xi) {
                ords.push_back(ord_v(K, v, x));
                support = support || ords.back() != 0;
            }
            if (!support) continue;
            pc.places.push_back(std::move(v));
            pc.valuations.resize(pc.places.size());
            pc.valuations.back() = std::move(ords);
        }
    }
    pc.valuations.resize(pc.places.size());

    for (std::size_t k = 0; k < pc.places.size(); ++k) {
        const Place& v = pc.places[k];
        std::vector<Real> l;
        for (std::size_t i = 0; i < c.xi.size(); ++i) {
            if (v.is_finite())
                l.push_back(Real(-pc.valuations[k][i] * v.residue_degree) * boost::multiprecision::log(to_real(v.p)));
            else
                l.push_back(log_abs_v(K, v, c.xi[i]));
        }
        pc.lyapunov.push_back(std::move(l));
    }
    return pc;
}

} // namespace rankone
