#pragma once

// Text format for polynomials and rational functions, e.g.
//   1 - 2*z - 4*z^2
//   x*y^2/((1 - 2*x + x^2 - x*y + x^2*y - x^2*y^2)*(1 - y - y^2))
// Variables come from {x, y, z, t, w}; coefficients are integers or p/q.
// Printing and parsing round-trip exactly.

#include <string>
#include <string_view>

#include "gfdiag/factored.hpp"

namespace gfdiag {

std::string to_string(const UniPoly& p);
std::string to_string(const BiPoly& p);
std::string to_string(const UniRatFunc& f);
std::string to_string(const BiRatFunc& f);

/// Parse a rational function in one variable. With var == 0 the variable
/// is taken from the text (defaulting to z for constants).
UniRatFunc parse_uni_ratfunc(std::string_view text, char var = 0);
/// Parse a rational function in (outer, inner).
BiRatFunc parse_bi_ratfunc(std::string_view text, char outer = 'x', char inner = 'y');

UniPoly parse_unipoly(std::string_view text, char var = 0);
BiPoly parse_bipoly(std::string_view text, char outer = 'x', char inner = 'y');

/// Variables occurring in a parseable expression, in {x,y,z,t,w} order.
std::string variables_of(std::string_view text);

}  // namespace gfdiag
