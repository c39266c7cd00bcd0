#include <doctest.h>

#include "gfdiag/error.hpp"
#include "gfdiag/gf_builder.hpp"
#include "gfdiag/poly_text.hpp"
#include "gfdiag/series.hpp"

using namespace gfdiag;

namespace {
std::vector<Rational> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("series_of_rational") {
  CHECK(series_of_rational(parse_uni_ratfunc("1/(1-2*z+2*z^3)"), 7).coeffs == R({1, 2, 4, 6, 8, 8, 4}));
  CHECK(series_of_rational(parse_uni_ratfunc("z/(1-z-z^2)"), 6).coeffs == R({0, 1, 1, 2, 3, 5}));
  auto c = series_of_rational(UniRatFunc(Rational(5, 3)), 3).coeffs;
  CHECK(c == std::vector<Rational>{Rational(5, 3), 0, 0});
  CHECK(series_of_rational(parse_uni_ratfunc("1/(1-z)"), 0).coeffs.empty());
  CHECK_THROWS_AS(series_of_rational(parse_uni_ratfunc("1/z"), 3), DomainError);
  CHECK_THROWS_AS(series_of_rational(parse_uni_ratfunc("1/(z - z^2)"), 3), DomainError);
}

TEST_CASE("bivariate_series") {
  BiRatFunc h = parse_bi_ratfunc("x*y^2/((1 - 2*x + x^2 - x*y - x^2*y + x^2*y^2)*(1 - y - y^2))");
  auto grid = bivariate_series(h, 6, 6);
  CHECK(grid[1][2] == 1);
  for (std::size_t m = 0; m < 6; ++m) CHECK(grid[0][m] == 0);

  auto ones = bivariate_series(parse_bi_ratfunc("1/((1-x)*(1-y))"), 5, 7);
  for (const auto& row : ones)
    for (const auto& v : row) CHECK(v == 1);
  CHECK_THROWS_AS(bivariate_series(parse_bi_ratfunc("1/(x+y)"), 2, 2), DomainError);
}

TEST_CASE("diagonal_series") {
  CHECK(diagonal_series(catalog_bivariate("trib.G"), 6).coeffs == R({0, 0, 2, 6, 22, 80}));
  CHECK(diagonal_series(parse_bi_ratfunc("1/((1-x)*(1-y))"), 5).coeffs == R({1, 1, 1, 1, 1}));
  CHECK(diagonal_series(parse_bi_ratfunc("x/(1-x*y)"), 6).coeffs == R({0, 0, 0, 0, 0, 0}));
}

TEST_CASE("generate_sequence") {
  CHECK(generate_sequence(SequenceSpec({0, 1, 1}), 8).coeffs == R({0, 1, 1, 2, 4, 7, 13, 24}));
  CHECK(generate_sequence(lucas(), 6).coeffs == R({2, 1, 3, 4, 7, 11}));
  CHECK(generate_sequence(SequenceSpec({2}, {1}), 4).coeffs == R({1, 2, 4, 8}));
  CHECK_THROWS_AS(SequenceSpec(R({1, 1}), R({0})), DomainError);
  CHECK_THROWS_AS(SequenceSpec(R({})), DomainError);
}

TEST_CASE("k-bonacci conventions") {
  CHECK(kbonacci(3, IndexConvention::shifted).initial == R({0, 1, 1}));
  CHECK(kbonacci(3, IndexConvention::unit_start).initial == R({1, 1, 2}));
  CHECK(kbonacci(2, IndexConvention::shifted).initial == R({0, 1}));
  CHECK(kbonacci(4, IndexConvention::shifted).initial == R({0, 1, 1, 2}));
  CHECK(kbonacci(1, IndexConvention::unit_start).initial == R({1}));
}

TEST_CASE("binomial_convolution") {
  auto fib = generate_sequence(kbonacci(2, IndexConvention::shifted), 10);
  CHECK(binomial_convolution(fib, fib, 2) == 2);
  CHECK(binomial_convolution(fib, fib, 3) == 6);
  SeriesTruncated zeros{'z', std::vector<Rational>(10)};
  CHECK(binomial_convolution(zeros, fib, 7) == 0);
  CHECK(binomial_convolutions(fib, fib, 4) == R({0, 0, 2, 6}));
  CHECK_THROWS_AS(binomial_convolution(fib, fib, 10), DomainError);
}

TEST_CASE("convolution_grid") {
  auto fib = generate_sequence(kbonacci(2, IndexConvention::shifted), 8);
  auto h = convolution_grid(fib, fib, 6, 6);
  CHECK(h[2][3] == 3);
  for (std::size_t n = 0; n < 6; ++n) CHECK(h[n][n] == binomial_convolution(fib, fib, n));

  auto a = generate_sequence(SequenceSpec({3, 1}), 6);
  auto b = generate_sequence(SequenceSpec({1, 2}), 6);
  auto g = convolution_grid(a, b, 6, 6);
  for (std::size_t m = 0; m < 6; ++m) CHECK(g[0][m] == a[0] * b[m]);
  CHECK_THROWS_AS(convolution_grid(fib, fib, 4, 9), DomainError);
}
