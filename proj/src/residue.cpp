#include "gfdiag/residue.hpp"

#include <algorithm>
#include <limits>

#include "gfdiag/dense.hpp"
#include "gfdiag/error.hpp"
#include "gfdiag/poly_fraction.hpp"
#include "gfdiag/series.hpp"

namespace gfdiag {

namespace {

constexpr char kT = 't';
constexpr char kZ = 'z';

using KPoly = std::vector<PolyFraction>;  // dense in t over Q(z)

BiPoly t_power(int k) { return BiPoly::monomial(1, k, 0, kT, kZ); }

// x^i y^j -> z^i t^(i-j); returns the polynomial divided by t^shift and
// the shift (the lowest t exponent).
std::pair<BiPoly, int> substitute(const BiPoly& p) {
  int shift = std::numeric_limits<int>::max();
  for (int i = 0; i <= p.outer_degree(); ++i) {
    const UniPoly& row = p.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j)
      if (!is_zero(row.coeffs()[static_cast<std::size_t>(j)])) shift = std::min(shift, i - j);
  }
  BiPoly out(kT, kZ);
  for (int i = 0; i <= p.outer_degree(); ++i) {
    const UniPoly& row = p.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j) {
      const Rational& c = row.coeffs()[static_cast<std::size_t>(j)];
      if (!is_zero(c)) out += BiPoly::monomial(c, i - j - shift, i, kT, kZ);
    }
  }
  return {out, shift};
}

KPoly to_kpoly(const BiPoly& p) {
  KPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.with_var(kZ));
  dense::trim(out);
  return out;
}

KPoly mod(const KPoly& a, const KPoly& m) { return dense::divrem(a, m).second; }

KPoly mulmod(const KPoly& a, const KPoly& b, const KPoly& m) { return mod(dense::mul(a, b), m); }

KPoly powmod(const KPoly& a, int e, const KPoly& m) {
  KPoly result = mod(KPoly{PolyFraction(1)}, m);
  for (int i = 0; i < e; ++i) result = mulmod(result, a, m);
  return result;
}

UniRatFunc to_ratfunc(const PolyFraction& f) {
  if (f.is_zero()) return UniRatFunc(0);
  return UniRatFunc(1, {{f.num().with_var(kZ), 1}}, {{f.den().with_var(kZ), 1}});
}

PolyFraction residue_at_origin(const HKTransformed& h, const PoleClass& pole) {
  const int k = pole.multiplicity;
  // [t^(k-1)] N / Q with Q the product of the other factors.
  KPoly num = to_kpoly(h.numerator);
  KPoly q{PolyFraction(1)};
  for (std::size_t i = 0; i < h.denom_factors.size(); ++i) {
    if (i == pole.factor_index) continue;
    const auto& f = h.denom_factors[i];
    for (int m = 0; m < f.mult; ++m) {
      q = dense::mul(q, to_kpoly(f.poly));
      if (q.size() > static_cast<std::size_t>(k)) q.resize(static_cast<std::size_t>(k));
    }
  }
  if (q.empty() || q[0].is_zero()) throw DegeneratePoleError("other factors vanish at t = 0");
  std::vector<PolyFraction> s(static_cast<std::size_t>(k));
  const PolyFraction inv = PolyFraction(1) / q[0];
  for (std::size_t n = 0; n < s.size(); ++n) {
    PolyFraction acc = n < num.size() ? num[n] : PolyFraction();
    for (std::size_t i = 1; i <= n && i < q.size(); ++i) acc = acc - q[i] * s[n - i];
    s[n] = acc * inv;
  }
  return s.back();
}

}  // namespace

Rational HKTransformed::operator()(const Rational& t, const Rational& z) const {
  Rational den = 1;
  for (const auto& f : denom_factors) {
    Rational v = f.poly(t, z);
    if (is_zero(v)) throw DomainError("transform evaluated at a pole");
    for (int i = 0; i < f.mult; ++i) den *= v;
  }
  return numerator(t, z) / den;
}

HKTransformed hk_transform(const BiRatFunc& f) {
  HKTransformed h;
  h.numerator = BiPoly::constant(f.constant(), kT, kZ);
  int net = -1;  // exponent of t carried by the numerator; starts with the 1/t
  for (const auto& fac : f.numer_factors()) {
    auto [p, shift] = substitute(fac.poly);
    h.cleared_t_powers.push_back(shift);
    net += shift * fac.mult;
    h.numerator *= p.pow(static_cast<unsigned>(fac.mult));
  }
  for (const auto& fac : f.denom_factors()) {
    auto [p, shift] = substitute(fac.poly);
    h.cleared_t_powers.push_back(shift);
    net -= shift * fac.mult;
    h.denom_factors.push_back({p, fac.mult});
  }
  if (net > 0) h.numerator *= t_power(net);
  if (net < 0) h.denom_factors.push_back({t_power(1), -net});
  return h;
}

bool PoleClass::is_origin() const { return factor == t_power(1); }

std::vector<PoleClass> classify_poles(const HKTransformed& h) {
  std::vector<PoleClass> out;
  for (std::size_t i = 0; i < h.denom_factors.size(); ++i) {
    const auto& f = h.denom_factors[i];
    if (f.poly.outer_degree() < 1) continue;
    PoleClass pc;
    pc.factor_index = i;
    pc.factor = f.poly;
    pc.multiplicity = f.mult;
    pc.reason = f.poly.outer_coeff(f.poly.outer_degree()).coeff(0);
    pc.kept = !is_zero(pc.reason);
    for (int d = 1; d <= f.poly.outer_degree() && !pc.kept; ++d)
      if (!is_zero(f.poly.outer_coeff(d).coeff(0))) pc.split = true;
    out.push_back(std::move(pc));
  }
  return out;
}

namespace {

PolyFraction residue_trace_value(const HKTransformed& h, const PoleClass& pole) {
  if (h.numerator.is_zero()) return PolyFraction();
  if (pole.is_origin()) return residue_at_origin(h, pole);
  if (pole.multiplicity != 1) throw DegeneratePoleError("kept factor with multiplicity " + std::to_string(pole.multiplicity));

  const KPoly p = to_kpoly(pole.factor);
  const KPoly dp = dense::derivative(p);
  if (dense::gcd(p, dp).size() != 1) throw DegeneratePoleError("kept factor is not squarefree in t");

  KPoly denom = mod(dp, p);
  for (std::size_t i = 0; i < h.denom_factors.size(); ++i) {
    if (i == pole.factor_index) continue;
    const auto& f = h.denom_factors[i];
    KPoly g = to_kpoly(f.poly);
    if (dense::gcd(p, g).size() != 1) throw DegeneratePoleError("kept factor shares roots with another factor");
    denom = mulmod(denom, powmod(mod(g, p), f.mult, p), p);
  }
  auto [g, inv] = dense::half_xgcd(denom, p);
  if (g.size() != 1) throw DegeneratePoleError("p'(t) * Q(t) is not invertible modulo the kept factor");

  KPoly r = mulmod(mod(to_kpoly(h.numerator), p), inv, p);

  // Trace of multiplication by r on the basis 1, t, ..., t^(d-1).
  const std::size_t d = p.size() - 1;
  PolyFraction trace;
  KPoly cur = r;
  for (std::size_t i = 0; i < d; ++i) {
    if (i < cur.size()) trace = trace + cur[i];
    cur.insert(cur.begin(), PolyFraction());
    cur = mod(cur, p);
  }
  return trace;
}

}  // namespace

UniRatFunc residue_trace(const HKTransformed& h, const PoleClass& pole) {
  return to_ratfunc(residue_trace_value(h, pole));
}

DiagonalResult diagonal_rational(const BiRatFunc& f, std::size_t check_terms) {
  DiagonalResult result;
  HKTransformed h = hk_transform(f);
  result.report.poles = classify_poles(h);
  PolyFraction total;
  for (const auto& pole : result.report.poles)
    if (pole.kept) total = total + residue_trace_value(h, pole);
  result.gf = to_ratfunc(total);
  for (const auto& pole : result.report.poles)
    if (pole.split) result.report.status = DiagonalStatus::method_assumption_violated;

  result.report.checked_terms = check_terms;
  if (check_terms > 0) {
    SeriesTruncated from_residue = series_of_rational(result.gf, check_terms);
    SeriesTruncated from_series = diagonal_series(f, check_terms);
    for (std::size_t n = 0; n < check_terms; ++n) {
      if (from_residue.coeffs[n] != from_series.coeffs[n]) {
        result.report.status = DiagonalStatus::method_assumption_violated;
        result.report.first_mismatch = n;
        result.report.residue_value = from_residue.coeffs[n];
        result.report.series_value = from_series.coeffs[n];
        break;
      }
    }
  }
  return result;
}

std::string to_string(DiagonalStatus s) {
  return s == DiagonalStatus::ok ? "ok" : "method-assumption-violated";
}

}  // namespace gfdiag
