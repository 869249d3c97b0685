#pragma once

#include <json.hpp>

#include "poltan/monomial.hpp"

namespace poltan {

// Wire form: {"variables": [names...],
//             "generators": [[[varIndex, exponent], ...], ...]}
// Loading validates indices and exponents, then minimalizes, so the result
// is always in canonical order.
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace poltan
