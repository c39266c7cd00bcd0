#pragma once

#include <string>

#include "gfdiag/unipoly.hpp"

namespace gfdiag {

/// Element of the rational function field Q(v): a reduced fraction of
/// UniPoly with monic denominator. Used as the coefficient field of the
/// quotient rings in the residue computation.
class PolyFraction {
 public:
  PolyFraction() : num_('z'), den_(UniPoly::constant(1)) {}
  PolyFraction(long c);  // NOLINT(implicit)
  PolyFraction(const Rational& c);  // NOLINT(implicit)
  PolyFraction(const UniPoly& p);  // NOLINT(implicit)
  PolyFraction(const UniPoly& num, const UniPoly& den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator()(const Rational& at) const;

  friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b);
  PolyFraction operator-() const { return PolyFraction(-num_, den_, reduced_tag{}); }
  friend bool operator==(const PolyFraction& a, const PolyFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct reduced_tag {};
  PolyFraction(UniPoly num, UniPoly den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const PolyFraction& f) { return f.is_zero(); }

}  // namespace gfdiag
