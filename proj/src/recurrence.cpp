#include "gfdiag/recurrence.hpp"

#include <stdexcept>

#include "gfdiag/series.hpp"

namespace gfdiag {

std::vector<Rational> LinearRecurrence::terms(std::size_t n) const {
  std::vector<Rational> out;
  out.reserve(n);
  const std::size_t r = order();
  for (std::size_t i = 0; i < n; ++i) {
    if (i < r) {
      out.push_back(initial[i]);
      continue;
    }
    Rational acc = 0;
    for (std::size_t j = 1; j <= r; ++j) acc += coeffs[j - 1] * out[i - j];
    out.push_back(acc);
  }
  return out;
}

std::optional<LinearRecurrence> find_min_recurrence(std::span<const Rational> s) {
  if (s.size() < 4) throw std::invalid_argument("recurrence detection needs at least 4 terms");

  // Connection polynomial C with s_n + sum_{i=1..L} C_i s_{n-i} = 0 for L <= n < len.
  std::vector<Rational> c{1}, b{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  Rational last_discrepancy = 1;

  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational d = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * s[n - i];
    if (is_zero(d)) {
      ++shift;
      continue;
    }
    const Rational factor = d / last_discrepancy;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= factor * b[i];
    if (2 * len <= n) {
      b = std::move(c);
      len = n + 1 - len;
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }

  if (len > s.size() / 2) return std::nullopt;
  LinearRecurrence rec;
  rec.coeffs.resize(len);
  for (std::size_t i = 1; i <= len; ++i) rec.coeffs[i - 1] = i < c.size() ? Rational(-c[i]) : Rational(0);
  rec.initial.assign(s.begin(), s.begin() + static_cast<long>(len));
  return rec;
}

UniRatFunc recurrence_to_gf(const LinearRecurrence& rec, char var) {
  const std::size_t r = rec.order();
  std::vector<Rational> den(r + 1);
  den[0] = 1;
  for (std::size_t i = 1; i <= r; ++i) den[i] = -rec.coeffs[i - 1];
  std::vector<Rational> num(r);
  for (std::size_t j = 0; j < r; ++j) {
    Rational v = 0;
    for (std::size_t i = 0; i <= j; ++i) v += den[i] * rec.initial[j - i];
    num[j] = v;
  }
  return UniRatFunc(1, {{UniPoly(var, num), 1}}, {{UniPoly(var, den), 1}});
}

AgreementReport certify_agreement(const UniRatFunc& f, std::span<const Rational> terms) {
  AgreementReport report;
  if (terms.empty()) return report;
  SeriesTruncated s = series_of_rational(f, terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (s.coeffs[i] != terms[i]) {
      report.agrees = false;
      report.first_mismatch = i;
      report.expected = s.coeffs[i];
      report.actual = terms[i];
      break;
    }
  }
  return report;
}

}  // namespace gfdiag
