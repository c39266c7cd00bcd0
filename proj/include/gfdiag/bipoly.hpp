#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gfdiag/unipoly.hpp"

namespace gfdiag {

/// Dense bivariate polynomial stored as a polynomial in the outer variable
/// whose coefficients are UniPoly in the inner variable. Coefficient (i, j)
/// belongs to outer^i * inner^j.
class BiPoly {
 public:
  /// (outer value, inner value)
  using point_type = std::pair<Rational, Rational>;

  BiPoly() = default;
  BiPoly(char outer, char inner) : outer_(outer), inner_(inner) {}
  BiPoly(char outer, char inner, std::vector<UniPoly> coeffs);

  static BiPoly constant(const Rational& c, char outer = 'x', char inner = 'y');
  /// c * outer^i * inner^j
  static BiPoly monomial(const Rational& c, int i, int j, char outer = 'x', char inner = 'y');
  /// Lift a polynomial in the outer (resp. inner) variable.
  static BiPoly from_outer(const UniPoly& p, char inner);
  static BiPoly from_inner(const UniPoly& p, char outer);

  char outer() const { return outer_; }
  char inner() const { return inner_; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  int outer_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int inner_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && (coeffs_.empty() || coeffs_[0].is_constant()); }
  Rational constant_value() const { return coeffs_.empty() ? Rational(0) : coeffs_[0].coeff(0); }

  Rational coeff(int i, int j) const;
  /// Coefficient UniPoly (inner variable) of outer^i.
  UniPoly outer_coeff(int i) const;
  /// First nonzero coefficient, scanning outer degree then inner degree.
  Rational lowest() const;

  Rational operator()(const point_type& at) const;
  Rational operator()(const Rational& outer_value, const Rational& inner_value) const;

  /// Same polynomial with the roles of the variables exchanged.
  BiPoly swapped() const;
  BiPoly truncated(std::size_t n_outer, std::size_t n_inner) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  BiPoly pow(unsigned e) const;
  BiPoly lowest_normalized() const;

 private:
  void adopt_vars(const BiPoly& o);
  void fix_inner();

  char outer_ = 'x';
  char inner_ = 'y';
  std::vector<UniPoly> coeffs_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

}  // namespace gfdiag
