#include "gfdiag/series.hpp"

#include <algorithm>

#include "gfdiag/error.hpp"

namespace gfdiag {

SequenceSpec::SequenceSpec(std::vector<Rational> c, std::vector<Rational> init)
    : coeffs(std::move(c)), initial(std::move(init)) {
  if (coeffs.empty()) throw DomainError("sequence order must be at least 1");
  if (initial.size() != coeffs.size())
    throw DomainError("expected " + std::to_string(coeffs.size()) + " initial terms, got " +
                      std::to_string(initial.size()));
}

SequenceSpec::SequenceSpec(std::vector<Rational> init)
    : SequenceSpec(std::vector<Rational>(init.size(), Rational(1)), init) {}

SequenceSpec kbonacci(int k, IndexConvention convention) {
  if (k < 1) throw DomainError("k-bonacci order must be at least 1");
  // a_n = sum_{i=1..k} a_{n-i} + [n == start], with a_{<0} = 0.
  const int start = convention == IndexConvention::unit_start ? 0 : 1;
  // 0, 1, 1, ... has no order-1 recurrence; pad with a zero coefficient.
  if (k == 1 && start == 1) return SequenceSpec({1, 0}, {0, 1});
  std::vector<Rational> init;
  for (int n = 0; n < k; ++n) {
    Rational v = n == start ? 1 : 0;
    for (int i = 1; i <= k && n - i >= 0; ++i) v += init[static_cast<std::size_t>(n - i)];
    init.push_back(v);
  }
  return SequenceSpec(std::move(init));
}

SequenceSpec lucas() { return SequenceSpec({2, 1}); }

SeriesTruncated series_of_rational(const UniRatFunc& f, std::size_t n) {
  char var = 'z';
  UniPoly num = UniPoly::constant(f.constant());
  for (const auto& fac : f.numer_factors()) {
    var = fac.poly.var();
    for (int i = 0; i < fac.mult; ++i) num = (num * fac.poly).truncated(n);
  }
  UniPoly den = f.expanded_denominator();
  if (!f.denom_factors().empty()) var = f.denom_factors().front().poly.var();
  Rational d0 = den.coeff(0);
  if (is_zero(d0)) throw DomainError("pole at the origin");
  const Rational inv = 1 / d0;
  const int dd = den.degree();
  SeriesTruncated out{var, std::vector<Rational>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = num.coeff(static_cast<int>(k));
    for (int i = 1; i <= dd && static_cast<std::size_t>(i) <= k; ++i)
      acc -= den.coeffs()[static_cast<std::size_t>(i)] * out.coeffs[k - static_cast<std::size_t>(i)];
    out.coeffs[k] = acc * inv;
  }
  return out;
}

CoefficientGrid bivariate_series(const BiRatFunc& f, std::size_t n_outer, std::size_t n_inner) {
  CoefficientGrid c(n_outer, std::vector<Rational>(n_inner));
  if (n_outer == 0 || n_inner == 0) return c;

  BiPoly num = BiPoly::constant(f.constant());
  for (const auto& fac : f.numer_factors())
    for (int i = 0; i < fac.mult; ++i) num = (num * fac.poly).truncated(n_outer, n_inner);
  BiPoly den = f.expanded_denominator();

  // Nested series division: with den = sum_i d_i(inner) outer^i, the row
  // c_n(inner) solves d_0 c_n = num_n - sum_{i>=1} d_i c_{n-i}, and division
  // by d_0 is itself a univariate series division.
  const UniPoly d0 = den.outer_coeff(0);
  const Rational d00 = d0.coeff(0);
  if (is_zero(d00)) throw DomainError("pole at the origin");
  const Rational inv = 1 / d00;

  for (std::size_t n = 0; n < n_outer; ++n) {
    std::vector<Rational> rhs(n_inner);
    const UniPoly num_n = num.outer_coeff(static_cast<int>(n));
    for (int j = 0; j <= num_n.degree() && static_cast<std::size_t>(j) < n_inner; ++j)
      rhs[static_cast<std::size_t>(j)] = num_n.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 1; i <= den.outer_degree() && static_cast<std::size_t>(i) <= n; ++i) {
      const UniPoly& di = den.coeffs()[static_cast<std::size_t>(i)];
      const auto& prev = c[n - static_cast<std::size_t>(i)];
      for (int j = 0; j <= di.degree(); ++j) {
        const Rational& dij = di.coeffs()[static_cast<std::size_t>(j)];
        if (is_zero(dij)) continue;
        for (std::size_t m = static_cast<std::size_t>(j); m < n_inner; ++m) rhs[m] -= dij * prev[m - static_cast<std::size_t>(j)];
      }
    }
    auto& row = c[n];
    for (std::size_t m = 0; m < n_inner; ++m) {
      Rational acc = rhs[m];
      for (int j = 1; j <= d0.degree() && static_cast<std::size_t>(j) <= m; ++j)
        acc -= d0.coeffs()[static_cast<std::size_t>(j)] * row[m - static_cast<std::size_t>(j)];
      row[m] = acc * inv;
    }
  }
  return c;
}

SeriesTruncated diagonal_series(const BiRatFunc& f, std::size_t n) {
  CoefficientGrid grid = bivariate_series(f, n, n);
  SeriesTruncated out{'z', std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = grid[i][i];
  return out;
}

SeriesTruncated generate_sequence(const SequenceSpec& spec, std::size_t n) {
  const std::size_t k = spec.order();
  SeriesTruncated out{'z', {}};
  out.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < k) {
      out.coeffs.push_back(spec.initial[i]);
      continue;
    }
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc += spec.coeffs[j] * out.coeffs[i - 1 - j];
    out.coeffs.push_back(acc);
  }
  return out;
}

namespace {

Rational convolve_row(const std::vector<Integer>& row, const SeriesTruncated& a, const SeriesTruncated& b,
                      std::size_t n) {
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (is_zero(a.coeffs[k]) || is_zero(b.coeffs[n - k])) continue;
    acc += Rational(row[k]) * a.coeffs[k] * b.coeffs[n - k];
  }
  return acc;
}

void require_terms(const SeriesTruncated& s, std::size_t needed, const char* which) {
  if (s.order() < needed)
    throw DomainError(std::string("insufficient terms in ") + which + ": need " + std::to_string(needed) +
                      ", have " + std::to_string(s.order()));
}

}  // namespace

Rational binomial_convolution(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n) {
  require_terms(a, n + 1, "first sequence");
  require_terms(b, n + 1, "second sequence");
  return convolve_row(pascal_row(static_cast<unsigned>(n)), a, b, n);
}

std::vector<Rational> binomial_convolutions(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n) {
  require_terms(a, n, "first sequence");
  require_terms(b, n, "second sequence");
  std::vector<Rational> out;
  out.reserve(n);
  std::vector<Integer> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      row.push_back(1);
      for (std::size_t k = i - 1; k >= 1; --k) row[k] += row[k - 1];
    }
    out.push_back(convolve_row(row, a, b, i));
  }
  return out;
}

CoefficientGrid convolution_grid(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n_n,
                                 std::size_t n_m) {
  require_terms(a, std::min(n_n, n_m), "first sequence");
  require_terms(b, n_m, "second sequence");
  CoefficientGrid h(n_n, std::vector<Rational>(n_m));
  std::vector<Integer> row{1};
  for (std::size_t n = 0; n < n_n; ++n) {
    if (n > 0) {
      row.push_back(1);
      for (std::size_t k = n - 1; k >= 1; --k) row[k] += row[k - 1];
    }
    for (std::size_t m = 0; m < n_m; ++m) {
      Rational acc = 0;
      for (std::size_t k = 0; k <= std::min(n, m); ++k) {
        if (is_zero(a.coeffs[k]) || is_zero(b.coeffs[m - k])) continue;
        acc += Rational(row[k]) * a.coeffs[k] * b.coeffs[m - k];
      }
      h[n][m] = acc;
    }
  }
  return h;
}

}  // namespace gfdiag
