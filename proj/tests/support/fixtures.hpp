#pragma once

#include <string>

#include "rankone/counting/count.hpp"

#ifndef RANKONE_SPEC_DIR
#error "RANKONE_SPEC_DIR must point at the sample specs"
#endif

namespace fixture {

inline rankone::ActionSpec spec(const std::string& name) {
    return rankone::load_spec(std::string(RANKONE_SPEC_DIR) + "/" + name + ".json");
}

inline rankone::PreparedAction prepared(const std::string& name) { return rankone::prepare(spec(name)); }

inline rankone::BigInt count(const rankone::PreparedAction& a, const rankone::Lattice& n) {
    return rankone::count_composite(a, n).value;
}

} // namespace fixture
