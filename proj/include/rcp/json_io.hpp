#pragma once

#include <json.hpp>

#include "rcp/extremal.hpp"
#include "rcp/polynomial.hpp"
#include "rcp/restraint.hpp"

namespace rcp {

/// Coefficients c0..cn as decimal strings, for exact round-trips.
nlohmann::json polynomial_to_json(const IntPolynomial& p);
/// Throws ParseError.
IntPolynomial polynomial_from_json(const nlohmann::json& j);

/// Array of integer arrays, one per vertex.
nlohmann::json restraint_to_json(const Restraint& r);
Restraint restraint_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ExtremalReport& report);
ExtremalReport report_from_json(const nlohmann::json& j);

}  // namespace rcp
