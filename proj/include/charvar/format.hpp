#pragma once

// Canonical text and JSON forms of polynomials.
//
// Text: terms in ascending graded-lexicographic order joined by " + " / " - ",
// each written as coefficient*var^exp*..., e.g. "x - 3*z - x*y + z^3".
// JSON: {"vars": [...], "laurent": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}.

#include <string>
#include <string_view>

#include "charvar/multipoly.hpp"
#include "charvar/ratfunc.hpp"
#include "json.hpp"

namespace charvar {

std::string to_string(const MultiPoly& p);
std::string to_string(const RationalFunction& f);

/// Parses +, -, *, ^ (integer exponents), parentheses, integers and a/b
/// rational literals over the given variables. Throws ParseError.
MultiPoly parse_poly(std::string_view text, const Vars& vars);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace charvar
