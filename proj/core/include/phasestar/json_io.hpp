#pragma once

#include <string>
#include <string_view>

#include "phasestar/ccr.hpp"
#include "phasestar/expr.hpp"
#include "phasestar/phase.hpp"

namespace phasestar {

/// {"kind":"operator"|"phase","terms":[{"m":1,"n":1,"re":"1/2","im":"0"}, ...]}
/// Terms appear in canonical order; coefficients are exact rational strings.
std::string to_json(const OperatorPoly& p);
std::string to_json(const PhasePoly& p);

/// Inverse of to_json. Throws ParseError on malformed input.
Lowered poly_from_json(std::string_view text);

}  // namespace phasestar
