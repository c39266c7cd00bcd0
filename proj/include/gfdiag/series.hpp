#pragma once

#include <cstddef>
#include <vector>

#include "gfdiag/factored.hpp"

namespace gfdiag {

/// First N coefficients of a power series in one variable.
struct SeriesTruncated {
  char var = 'z';
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  friend bool operator==(const SeriesTruncated&, const SeriesTruncated&) = default;
};

/// grid[n][m] is the coefficient of outer^n * inner^m.
using CoefficientGrid = std::vector<std::vector<Rational>>;

/// Linear recurrence a_n = sum_i coeffs[i] * a_{n-1-i} for n >= k, started
/// from k initial terms. All-ones coefficients give the k-bonacci family.
struct SequenceSpec {
  std::vector<Rational> coeffs;
  std::vector<Rational> initial;

  SequenceSpec(std::vector<Rational> coeffs, std::vector<Rational> initial);
  /// All-ones coefficients with the given initial terms.
  explicit SequenceSpec(std::vector<Rational> initial);

  std::size_t order() const { return coeffs.size(); }
};

enum class IndexConvention {
  /// generating function 1/(1 - z - ... - z^k), a_0 = 1
  unit_start,
  /// generating function z/(1 - z - ... - z^k), a_0 = 0
  shifted,
};

/// k-bonacci sequence under the chosen index convention.
SequenceSpec kbonacci(int k, IndexConvention convention);
/// Lucas numbers 2, 1, 3, 4, 7, ...
SequenceSpec lucas();

/// First N Taylor coefficients at 0; DomainError on a pole at the origin.
SeriesTruncated series_of_rational(const UniRatFunc& f, std::size_t n);

/// Coefficients c[n][m] for n < n_outer, m < n_inner.
CoefficientGrid bivariate_series(const BiRatFunc& f, std::size_t n_outer, std::size_t n_inner);

/// Entries c[n][n] for n < N.
SeriesTruncated diagonal_series(const BiRatFunc& f, std::size_t n);

SeriesTruncated generate_sequence(const SequenceSpec& spec, std::size_t n);

/// sum_k C(n,k) a_k b_{n-k}
Rational binomial_convolution(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n);

/// binomial_convolution for every n < N, sharing the Pascal rows.
std::vector<Rational> binomial_convolutions(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n);

/// h[n][m] = sum_k C(n,k) a_k b_{m-k}; out-of-range b indices contribute 0.
CoefficientGrid convolution_grid(const SeriesTruncated& a, const SeriesTruncated& b, std::size_t n_n,
                                 std::size_t n_m);

}  // namespace gfdiag
