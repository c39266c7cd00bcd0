#include <doctest.h>

#include "gfdiag/error.hpp"
#include "gfdiag/poly_text.hpp"

using namespace gfdiag;

TEST_CASE("polynomial printing") {
  CHECK(to_string(parse_unipoly("1 - 2*z - 4*z^2")) == "1 - 2*z - 4*z^2");
  CHECK(to_string(parse_unipoly("-z + 3/2*z^3")) == "-z + 3/2*z^3");
  CHECK(to_string(UniPoly('z')) == "0");
  CHECK(to_string(parse_bipoly("x*y^2 - 2*x + 1")) == "1 - 2*x + x*y^2");
}

TEST_CASE("rational function printing") {
  UniRatFunc f = parse_uni_ratfunc("2*z^2/((1 - z)*(1 - 2*z - 4*z^2))");
  CHECK(to_string(f) == "2*z^2/((1 - z)*(1 - 2*z - 4*z^2))");
  CHECK(to_string(parse_uni_ratfunc("-3/(1 - z)^2")) == "-3/(1 - z)^2");
  CHECK(to_string(parse_uni_ratfunc("0*z/(1-z)")) == "0");
  CHECK(to_string(parse_uni_ratfunc("5/3")) == "5/3");
}

TEST_CASE("parser semantics") {
  UniRatFunc f = parse_uni_ratfunc("1/(1-z) + 1/(1-z)");
  CHECK(f.constant() == 2);
  CHECK(f(Rational(1, 2)) == 4);
  CHECK(parse_uni_ratfunc("-z^2")(Rational(3)) == -9);
  CHECK(parse_uni_ratfunc("(1 + z)^3")(Rational(1)) == 8);
  CHECK(parse_uni_ratfunc("1/2/z")(Rational(1, 4)) == 2);
  CHECK(variables_of("x*y + t") == "xyt");
  // sums over different denominators
  UniRatFunc g = parse_uni_ratfunc("1/(1-z) - 1/(1+z)");
  CHECK(g(Rational(1, 3)) == Rational(3, 2) - Rational(3, 4));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_uni_ratfunc("1 +"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("(1 - z"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("1 - q"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("x + z"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("z^-1"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("zz"), ParseError);
  CHECK_THROWS_AS(parse_bi_ratfunc("x + t"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("1/(1 - z)"), ParseError);
  CHECK_THROWS_AS(parse_uni_ratfunc("1/(z - z)"), DomainError);
}

TEST_CASE("round trip of catalogued displays") {
  for (const char* text : {"x*y^2/((1 - 2*x + x^2 - x*y - x^2*y + x^2*y^2)*(1 - y - y^2))",
                           "3/7*(x - y)^2/(1 - x*y)^3", "-x/(1 - 2*y)"}) {
    BiRatFunc f = parse_bi_ratfunc(text);
    CHECK(parse_bi_ratfunc(to_string(f)) == f);
  }
}
