#include "gfdiag/poly_fraction.hpp"

#include "gfdiag/error.hpp"

namespace gfdiag {

PolyFraction::PolyFraction(long c) : PolyFraction(Rational(c)) {}

PolyFraction::PolyFraction(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}

PolyFraction::PolyFraction(const UniPoly& p) : num_(p), den_(UniPoly::constant(1, p.var())) {}

PolyFraction::PolyFraction(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void PolyFraction::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1, den_.var());
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational PolyFraction::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (gfdiag::is_zero(d)) throw DomainError("rational function evaluated at a pole");
  return num_(at) / d;
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return PolyFraction(a.num_ + b.num_, a.den_);
  return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) { return a + (-b); }

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  if (a.is_zero() || b.is_zero()) return PolyFraction();
  if (a.den_.is_constant() && b.den_.is_constant())
    return PolyFraction(a.num_ * b.num_, a.den_ * b.den_, PolyFraction::reduced_tag{});
  return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace gfdiag
