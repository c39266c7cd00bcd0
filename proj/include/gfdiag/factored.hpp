#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "gfdiag/bipoly.hpp"
#include "gfdiag/error.hpp"
#include "gfdiag/unipoly.hpp"

namespace gfdiag {

inline Rational constant_value(const UniPoly& p) { return p.coeff(0); }
inline Rational constant_value(const BiPoly& p) { return p.constant_value(); }
inline UniPoly unit_like(const UniPoly& p) { return UniPoly::constant(1, p.var()); }
inline BiPoly unit_like(const BiPoly& p) { return BiPoly::constant(1, p.outer(), p.inner()); }

template <class P>
struct Factor {
  P poly;
  int mult = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Rational function kept as constant * prod(numer^m) / prod(denom^m).
///
/// Every stored factor is non-constant and scaled so that its lowest-order
/// nonzero coefficient is 1 (constant term 1 whenever the constant term is
/// nonzero); the scalars live in constant(). Equal factors are merged and
/// factors common to numerator and denominator cancel. No other
/// simplification happens: products are never expanded here.
template <class P>
class FactoredRatFunc {
 public:
  using poly_type = P;
  using point_type = typename P::point_type;

  FactoredRatFunc() = default;
  FactoredRatFunc(const Rational& c) : constant_(c) {}  // NOLINT(implicit)
  FactoredRatFunc(Rational c, std::vector<Factor<P>> numer, std::vector<Factor<P>> denom)
      : constant_(std::move(c)), numer_(std::move(numer)), denom_(std::move(denom)) {
    normalize();
  }

  static FactoredRatFunc from_poly(const P& p) { return FactoredRatFunc(1, {{p, 1}}, {}); }
  static FactoredRatFunc ratio(const P& num, const P& den) { return FactoredRatFunc(1, {{num, 1}}, {{den, 1}}); }

  const Rational& constant() const { return constant_; }
  const std::vector<Factor<P>>& numer_factors() const { return numer_; }
  const std::vector<Factor<P>>& denom_factors() const { return denom_; }
  bool is_zero() const { return gfdiag::is_zero(constant_); }

  FactoredRatFunc& operator*=(const FactoredRatFunc& o) {
    constant_ *= o.constant_;
    numer_.insert(numer_.end(), o.numer_.begin(), o.numer_.end());
    denom_.insert(denom_.end(), o.denom_.begin(), o.denom_.end());
    normalize();
    return *this;
  }

  FactoredRatFunc& operator/=(const FactoredRatFunc& o) { return *this *= o.inverse(); }

  friend FactoredRatFunc operator*(FactoredRatFunc a, const FactoredRatFunc& b) { return a *= b; }
  friend FactoredRatFunc operator/(FactoredRatFunc a, const FactoredRatFunc& b) { return a /= b; }
  FactoredRatFunc operator-() const {
    FactoredRatFunc r(*this);
    r.constant_ = -r.constant_;
    return r;
  }

  FactoredRatFunc inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero rational function");
    FactoredRatFunc r;
    r.constant_ = 1 / constant_;
    r.numer_ = denom_;
    r.denom_ = numer_;
    return r;
  }

  FactoredRatFunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return FactoredRatFunc(1);
    FactoredRatFunc r(*this);
    Rational c = 1;
    for (int i = 0; i < e; ++i) c *= constant_;
    r.constant_ = c;
    for (auto& f : r.numer_) f.mult *= e;
    for (auto& f : r.denom_) f.mult *= e;
    return r;
  }

  /// Exact value; throws DomainError when a denominator factor vanishes.
  Rational operator()(const point_type& at) const {
    Rational num = constant_;
    Rational den = 1;
    for (const auto& f : numer_) num *= power(f.poly(at), f.mult);
    for (const auto& f : denom_) {
      Rational v = f.poly(at);
      if (gfdiag::is_zero(v)) throw DomainError("rational function evaluated at a pole");
      den *= power(v, f.mult);
    }
    return num / den;
  }

  /// Fully expanded (numerator, denominator); the constant goes into the
  /// numerator and no gcd cancellation takes place.
  std::pair<P, P> expand() const {
    P num = P::constant(constant_);
    P den = P::constant(1);
    for (const auto& f : numer_) num *= f.poly.pow(static_cast<unsigned>(f.mult));
    for (const auto& f : denom_) den *= f.poly.pow(static_cast<unsigned>(f.mult));
    return {num, den};
  }

  P expanded_denominator() const {
    P den = P::constant(1);
    for (const auto& f : denom_) den *= f.poly.pow(static_cast<unsigned>(f.mult));
    return den;
  }

  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    return a.constant_ == b.constant_ && same_factors(a.numer_, b.numer_) && same_factors(a.denom_, b.denom_);
  }

 private:
  static Rational power(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  static bool same_factors(std::vector<Factor<P>> a, std::vector<Factor<P>> b) {
    if (a.size() != b.size()) return false;
    for (const auto& f : a) {
      auto it = std::find(b.begin(), b.end(), f);
      if (it == b.end()) return false;
      b.erase(it);
    }
    return true;
  }

  // Returns the scalar pulled out of the list raised to its multiplicities.
  static Rational normalize_list(std::vector<Factor<P>>& list, bool& zero_factor) {
    Rational scalar = 1;
    std::vector<Factor<P>> out;
    for (auto& f : list) {
      if (f.mult < 0) throw DomainError("negative factor multiplicity");
      if (f.mult == 0) continue;
      if (f.poly.is_zero()) {
        zero_factor = true;
        continue;
      }
      if (f.poly.is_constant()) {
        scalar *= power(constant_value(f.poly), f.mult);
        continue;
      }
      Rational low = f.poly.lowest();
      scalar *= power(low, f.mult);
      P normalized = f.poly * Rational(1 / low);
      auto it = std::find_if(out.begin(), out.end(), [&](const Factor<P>& g) { return g.poly == normalized; });
      if (it != out.end())
        it->mult += f.mult;
      else
        out.push_back({std::move(normalized), f.mult});
    }
    list = std::move(out);
    return scalar;
  }

  void normalize() {
    bool numer_zero = false, denom_zero = false;
    constant_ *= normalize_list(numer_, numer_zero);
    Rational d = normalize_list(denom_, denom_zero);
    if (denom_zero) throw DomainError("zero polynomial in a denominator");
    constant_ /= d;
    if (numer_zero) constant_ = 0;
    for (auto& n : numer_) {
      auto it = std::find_if(denom_.begin(), denom_.end(), [&](const Factor<P>& g) { return g.poly == n.poly; });
      if (it == denom_.end()) continue;
      int common = std::min(n.mult, it->mult);
      n.mult -= common;
      it->mult -= common;
    }
    std::erase_if(numer_, [](const Factor<P>& f) { return f.mult == 0; });
    std::erase_if(denom_, [](const Factor<P>& f) { return f.mult == 0; });
    if (gfdiag::is_zero(constant_)) {
      numer_.clear();
      denom_.clear();
    }
  }

  Rational constant_ = 0;
  std::vector<Factor<P>> numer_;
  std::vector<Factor<P>> denom_;
};

using UniRatFunc = FactoredRatFunc<UniPoly>;
using BiRatFunc = FactoredRatFunc<BiPoly>;

/// Rational-function identity test by cross multiplication: a.num * b.den == b.num * a.den.
template <class P>
bool same_function(const FactoredRatFunc<P>& a, const FactoredRatFunc<P>& b) {
  auto [an, ad] = a.expand();
  auto [bn, bd] = b.expand();
  return an * bd == bn * ad;
}

/// Substitute s_numer/s_denom for the (single) variable of f. A factor g of
/// degree d becomes s_denom^d * g(s_numer/s_denom); the leftover powers of
/// s_denom are appended as a factor so the result equals f(s_numer/s_denom)
/// wherever both sides are defined.
template <class P>
FactoredRatFunc<P> compose_rational(const UniRatFunc& f, const P& s_numer, const P& s_denom) {
  if (s_denom.is_zero()) throw DomainError("zero substitution denominator");
  auto homogenize = [&](const UniPoly& g) {
    const int d = g.degree();
    P acc = s_numer * Rational(0);
    for (int i = 0; i <= d; ++i) {
      P term = s_numer.pow(static_cast<unsigned>(i)) * s_denom.pow(static_cast<unsigned>(d - i));
      acc += term * g.coeff(i);
    }
    return acc;
  };
  std::vector<Factor<P>> numer, denom;
  int balance = 0;  // net exponent of s_denom carried by the numerator
  for (const auto& f_n : f.numer_factors()) {
    numer.push_back({homogenize(f_n.poly), f_n.mult});
    balance -= f_n.poly.degree() * f_n.mult;
  }
  for (const auto& f_d : f.denom_factors()) {
    denom.push_back({homogenize(f_d.poly), f_d.mult});
    balance += f_d.poly.degree() * f_d.mult;
  }
  if (balance > 0) numer.push_back({s_denom, balance});
  if (balance < 0) denom.push_back({s_denom, -balance});
  return FactoredRatFunc<P>(f.constant(), std::move(numer), std::move(denom));
}

}  // namespace gfdiag

namespace gfdiag {

/// Single reduced fraction: numerator and denominator divided by their
/// gcd, denominator scaled to constant term 1 when it has one.
UniRatFunc reduced_form(const UniRatFunc& f);

}  // namespace gfdiag
