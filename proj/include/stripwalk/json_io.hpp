#pragma once

#include <nlohmann/json.hpp>

#include "stripwalk/oracle.hpp"
#include "stripwalk/poly.hpp"
#include "stripwalk/recurrences.hpp"
#include "stripwalk/series_vec.hpp"

namespace stripwalk {

using json = nlohmann::json;

/// { "var": "t"|"z", "coeffs": ["1", "-3", ...] }, ascending exponents.
/// The z form halves exponents and throws parity_violation for odd
/// polynomials.
json poly_to_json(const IntPoly& p, Var var);

/// Inverse of poly_to_json. Throws bad_format.
IntPoly poly_from_json(const json& j);

/// Same layout as polynomials; entries are walk counts or coefficients.
json series_to_json(const SeriesVec& s);
SeriesVec series_from_json(const json& j);

/// { "kind", "w", "ok", "residual_degree" } (+ "applicable": false when the
/// recurrence needs more predecessors than exist).
json to_json(const IdentityCheck& c);
json to_json(const DecompositionCheck& c);

}  // namespace stripwalk
