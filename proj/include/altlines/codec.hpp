#pragma once

// Text and JSON encodings of exact values, plus the human polynomial syntax
// accepted on the command line ("X^5+4X^4-5*X^3-1/2").

#include <string>
#include <string_view>

#include <json.hpp>

#include "altlines/poly.hpp"

namespace altlines {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Json to_json(const RatPoly& p);
/// Each coefficient as [a, b]; the field parameter is stored separately.
Json to_json(const QuadPoly& p);
Json to_json(const QuadElem& x);

Rat rat_from_json(const Json& j);
RatPoly ratpoly_from_json(const Json& j);
QuadElem quad_from_json(const Json& j, long long m);
QuadPoly quadpoly_from_json(const Json& j, long long m);

/// Parses a sum of terms c*X^k in the variable `var`. Coefficients are
/// integers or fractions; "4X^4" and "4*X^4" are both accepted.
RatPoly parse_poly(std::string_view text, char var = 'X');

}  // namespace altlines
