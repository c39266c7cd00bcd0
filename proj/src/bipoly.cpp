#include "gfdiag/bipoly.hpp"

#include <algorithm>

#include "gfdiag/dense.hpp"
#include "gfdiag/error.hpp"

namespace gfdiag {

BiPoly::BiPoly(char outer, char inner, std::vector<UniPoly> coeffs)
    : outer_(outer), inner_(inner), coeffs_(std::move(coeffs)) {
  fix_inner();
}

void BiPoly::fix_inner() {
  dense::trim(coeffs_);
  for (auto& c : coeffs_) {
    if (!c.is_constant() && c.var() != inner_)
      throw DomainError(std::string("inner variable mismatch: ") + c.var() + " vs " + inner_);
    c = c.with_var(inner_);
  }
}

BiPoly BiPoly::constant(const Rational& c, char outer, char inner) {
  return BiPoly(outer, inner, {UniPoly::constant(c, inner)});
}

BiPoly BiPoly::monomial(const Rational& c, int i, int j, char outer, char inner) {
  std::vector<UniPoly> v(static_cast<std::size_t>(i) + 1, UniPoly(inner));
  v.back() = UniPoly::monomial(c, j, inner);
  return BiPoly(outer, inner, std::move(v));
}

BiPoly BiPoly::from_outer(const UniPoly& p, char inner) {
  std::vector<UniPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c, inner));
  return BiPoly(p.var(), inner, std::move(v));
}

BiPoly BiPoly::from_inner(const UniPoly& p, char outer) {
  if (p.is_zero()) return BiPoly(outer, p.var());
  return BiPoly(outer, p.var(), {p});
}

int BiPoly::inner_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Rational BiPoly::coeff(int i, int j) const {
  if (i < 0 || i > outer_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)].coeff(j);
}

UniPoly BiPoly::outer_coeff(int i) const {
  if (i < 0 || i > outer_degree()) return UniPoly(inner_);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational BiPoly::lowest() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return c.lowest();
  return 0;
}

Rational BiPoly::operator()(const Rational& outer_value, const Rational& inner_value) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * outer_value + coeffs_[i](inner_value);
  return acc;
}

Rational BiPoly::operator()(const point_type& at) const { return (*this)(at.first, at.second); }

BiPoly BiPoly::swapped() const {
  int n = inner_degree();
  std::vector<UniPoly> v;
  for (int j = 0; j <= n; ++j) {
    std::vector<Rational> col(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) col[i] = coeffs_[i].coeff(j);
    v.emplace_back(outer_, std::move(col));
  }
  return BiPoly(inner_, outer_, std::move(v));
}

BiPoly BiPoly::truncated(std::size_t n_outer, std::size_t n_inner) const {
  std::vector<UniPoly> v;
  for (std::size_t i = 0; i < std::min(n_outer, coeffs_.size()); ++i) v.push_back(coeffs_[i].truncated(n_inner));
  return BiPoly(outer_, inner_, std::move(v));
}

void BiPoly::adopt_vars(const BiPoly& o) {
  if (o.is_constant()) return;
  if (is_constant()) {
    outer_ = o.outer_;
    inner_ = o.inner_;
    fix_inner();
    return;
  }
  if (outer_ != o.outer_ || inner_ != o.inner_)
    throw DomainError(std::string("variable mismatch: (") + outer_ + "," + inner_ + ") vs (" + o.outer_ + "," +
                      o.inner_ + ")");
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  adopt_vars(o);
  coeffs_ = dense::add(coeffs_, o.coeffs_);
  fix_inner();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  adopt_vars(o);
  coeffs_ = dense::sub(coeffs_, o.coeffs_);
  fix_inner();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  adopt_vars(o);
  coeffs_ = dense::mul(coeffs_, o.coeffs_);
  fix_inner();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  dense::trim(coeffs_);
  return *this;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || (a.outer_ == b.outer_ && a.inner_ == b.inner_);
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1, outer_, inner_);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

BiPoly BiPoly::lowest_normalized() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lowest());
}

}  // namespace gfdiag
