#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gfdiag/rational.hpp"

namespace gfdiag {

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// var^i; trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
///
/// Constants carry a variable name but are compatible with every variable:
/// arithmetic only rejects operands that are both non-constant in
/// different variables.
class UniPoly {
 public:
  using point_type = Rational;

  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  UniPoly(char var, std::vector<Rational> coeffs);
  UniPoly(char var, std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c, char var = 'z');
  static UniPoly monomial(const Rational& c, int degree, char var = 'z');

  char var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of var^i, zero beyond the degree.
  Rational coeff(int i) const;
  Rational leading() const;
  /// First nonzero coefficient in increasing degree; zero for the zero polynomial.
  Rational lowest() const;
  /// Index of the first nonzero coefficient (-1 for zero).
  int valuation() const;

  Rational operator()(const Rational& at) const;
  UniPoly with_var(char var) const { return UniPoly(var, coeffs_); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

  /// Equality of values; variable names only matter for non-constants.
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// Truncate to degrees < n.
  UniPoly truncated(std::size_t n) const;
  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Scaled so the lowest-order nonzero coefficient is 1.
  UniPoly lowest_normalized() const;

 private:
  friend class BiPoly;
  char var_ = 'z';
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

/// Resolve the variable of a binary operation; throws DomainError on mismatch.
char common_var(const UniPoly& a, const UniPoly& b);

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

/// Monic gcd over Q; gcd(0, 0) throws DomainError.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Inverse of a modulo m, or the zero polynomial when gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// True when a and b differ by a nonzero scalar factor.
bool associates(const UniPoly& a, const UniPoly& b);

}  // namespace gfdiag
