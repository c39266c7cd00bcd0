#include "gfdiag/unipoly.hpp"

#include "gfdiag/dense.hpp"
#include "gfdiag/error.hpp"

namespace gfdiag {

UniPoly::UniPoly(char var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
  dense::trim(coeffs_);
}

UniPoly::UniPoly(char var, std::initializer_list<long> coeffs) : var_(var) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  dense::trim(coeffs_);
}

UniPoly UniPoly::constant(const Rational& c, char var) { return UniPoly(var, std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree, char var) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(var, std::move(v));
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

int UniPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!gfdiag::is_zero(coeffs_[i])) return static_cast<int>(i);
  return -1;
}

Rational UniPoly::lowest() const {
  int v = valuation();
  return v < 0 ? Rational(0) : coeffs_[static_cast<std::size_t>(v)];
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

char common_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.is_constant() ? a.var() : b.var();
  if (b.is_constant() || a.var() == b.var()) return a.var();
  throw DomainError(std::string("variable mismatch: ") + a.var() + " vs " + b.var());
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  var_ = common_var(*this, o);
  coeffs_ = dense::add(coeffs_, o.coeffs_);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  var_ = common_var(*this, o);
  coeffs_ = dense::sub(coeffs_, o.coeffs_);
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  var_ = common_var(*this, o);
  coeffs_ = dense::mul(coeffs_, o.coeffs_);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  coeffs_ = dense::scale(coeffs_, s);
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || a.var_ == b.var_;
}

UniPoly UniPoly::truncated(std::size_t n) const {
  if (coeffs_.size() <= n) return *this;
  return UniPoly(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1, var_);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::derivative() const { return UniPoly(var_, dense::derivative(coeffs_)); }

UniPoly UniPoly::monic() const { return UniPoly(var_, dense::make_monic(coeffs_)); }

UniPoly UniPoly::lowest_normalized() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lowest());
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  char v = common_var(a, b);
  auto [q, r] = dense::divrem(a.coeffs(), b.coeffs());
  return {UniPoly(v, std::move(q)), UniPoly(v, std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  char v = common_var(a, b);
  return UniPoly(v, dense::gcd(a.coeffs(), b.coeffs()));
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  char v = common_var(a, m);
  auto [g, s] = dense::half_xgcd(a.coeffs(), m.coeffs());
  if (g.size() != 1) return UniPoly(v);
  return UniPoly(v, dense::divrem(s, m.coeffs()).second);
}

bool associates(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

}  // namespace gfdiag
