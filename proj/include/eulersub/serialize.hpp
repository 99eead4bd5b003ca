#pragma once

// JSON views of the library's results. Exact values are emitted as strings so
// that nothing passes through binary floating point; numeric results are numbers.

#include <json.hpp>

#include "eulersub/conic.hpp"
#include "eulersub/substitution.hpp"
#include "eulersub/verify.hpp"

namespace eulersub {

using Json = nlohmann::ordered_json;

Json to_json(const QuadNum& value);
Json to_json(const CurvePoint& point);

/// {"class", "discriminant", "canonical": {"p","q"} | null, "points": {"M1".."R2": {"x","y"} | null}}
Json classification_json(const Conic& conic);

/// Exact parameterizations give canonical RatFunc strings; numeric ones give
/// decimal renderings and "exact": false.
Json parameterization_json(const Parameterization& param);

/// {"direct": value | {"error"}, "methods": {name: value | {"error"}}, "max_deviation", "direct_deviation"}
Json report_json(const CrossCheckReport& report);

/// Readable rendering of a double-coefficient rational function, "(N) / (D)".
std::string numeric_to_string(const NumericRatFunc& f, std::string_view var = "u");

}  // namespace eulersub
