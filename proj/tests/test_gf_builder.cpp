#include <doctest.h>

#include <stdexcept>

#include "gfdiag/gf_builder.hpp"
#include "gfdiag/poly_text.hpp"

using namespace gfdiag;

TEST_CASE("sequence_gf") {
  CHECK(same_function(sequence_gf(kbonacci(3, IndexConvention::shifted)), parse_uni_ratfunc("z/(1-z-z^2-z^3)")));
  CHECK(same_function(sequence_gf(kbonacci(3, IndexConvention::unit_start)), parse_uni_ratfunc("1/(1-z-z^2-z^3)")));
  CHECK(same_function(sequence_gf(lucas()), parse_uni_ratfunc("(2 - z)/(1 - z - z^2)")));
  // arbitrary initial conditions only change the numerator
  auto custom = sequence_gf(SequenceSpec({2, -1, 3}));
  CHECK(custom.expand().second == parse_unipoly("1 - z - z^2 - z^3"));
}

TEST_CASE("build_convolution_gf") {
  auto fib = kbonacci(2, IndexConvention::shifted);
  ConvolutionGF h = build_convolution_gf(fib, fib);
  CHECK(h.provenance == Provenance::derived);
  CHECK(bivariate_series(h.function, 4, 4)[2][3] == 3);
  CHECK(same_function(h.function,
                      parse_bi_ratfunc("x*y^2/((1 - 2*x + x^2 - x*y + x^2*y - x^2*y^2)*(1 - y - y^2))")));

  auto trib = kbonacci(3, IndexConvention::shifted);
  CHECK(diagonal_series(build_convolution_gf(trib, trib).function, 6).coeffs ==
        std::vector<Rational>{0, 0, 2, 6, 22, 80});

  SequenceSpec zero({0, 0});
  CHECK(build_convolution_gf(zero, fib).function.is_zero());
}

TEST_CASE("printed catalog") {
  UniRatFunc d = printed_gf("fib.diag.printed");
  CHECK(d.constant() == 1);
  REQUIRE(d.numer_factors().size() == 1);
  CHECK(d.numer_factors()[0].poly == parse_unipoly("z"));
  CHECK(d.numer_factors()[0].mult == 2);
  REQUIRE(d.denom_factors().size() == 2);

  UniRatFunc t = printed_gf("trib.diag.printed");
  CHECK(t.numer_factors().size() == 1);
  CHECK(t.expanded_denominator() == parse_unipoly("1 - 2*z - 4*z^2 - 8*z^3") * parse_unipoly("1 - 2*z + 2*z^3"));

  UniRatFunc tetra = printed_gf("tetra.diag.printed");
  CHECK(tetra.expanded_denominator().degree() == 10);
  CHECK(printed_gf("penta.diag.printed").expanded_denominator().degree() == 15);

  CHECK_THROWS_AS(printed_gf("no.such"), std::out_of_range);
  CHECK_THROWS_AS(printed_gf("trib.G"), std::out_of_range);
  CHECK_THROWS_AS(catalog_bivariate("fib.diag.printed"), std::out_of_range);
  for (const auto& e : gf_catalog()) {
    if (e.bivariate)
      CHECK_NOTHROW(catalog_bivariate(e.id));
    else
      CHECK_NOTHROW(printed_gf(e.id));
  }
}
