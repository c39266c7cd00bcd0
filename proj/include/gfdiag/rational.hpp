#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gfdiag {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps the value canonical (reduced, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "0,1,1" or "1/2, -3".
std::vector<Rational> parse_rational_list(std::string_view text);

Rational make_rational(long num, long den = 1);

/// Row n of Pascal's triangle: C(n,0) .. C(n,n).
std::vector<Integer> pascal_row(unsigned n);

}  // namespace gfdiag
