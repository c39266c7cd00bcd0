#include <doctest.h>

#include "gfdiag/error.hpp"
#include "gfdiag/factored.hpp"
#include "gfdiag/poly_text.hpp"

using namespace gfdiag;

namespace {
UniPoly P(const char* s) { return parse_unipoly(s); }
}  // namespace

TEST_CASE("rational values are canonical") {
  Rational q = parse_rational("-6/4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  auto list = parse_rational_list("0, 1/2,-3");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == Rational(1, 2));
  CHECK(list[2] == -3);
}

TEST_CASE("pascal rows") {
  auto row = pascal_row(5);
  CHECK(row == std::vector<Integer>{1, 5, 10, 10, 5, 1});
  CHECK(pascal_row(0) == std::vector<Integer>{1});
}

TEST_CASE("poly_arith") {
  CHECK(P("1 - z - z^2") + P("z^2") == P("1 - z"));
  CHECK(P("1 - z") * P("1 - 2*z - 4*z^2") == P("1 - 3*z - 2*z^2 + 4*z^3"));
  CHECK((P("1 + z^5") * UniPoly('z')).is_zero());
  CHECK((P("z^3 - 1") - P("z^3 - 1")).degree() == -1);
  CHECK_THROWS_AS(UniPoly('x', {1, 1}) + UniPoly('y', {0, 1}), DomainError);
  // constants combine with any variable
  CHECK((UniPoly::constant(2, 'z') * UniPoly('x', {1, 1})).var() == 'x');
}

TEST_CASE("poly_divrem") {
  SUBCASE("monomial divisor") {
    auto [q, r] = divrem(P("t^2 - t - 1"), P("t"));
    CHECK(q == P("t - 1"));
    CHECK(r == P("-1"));
  }
  SUBCASE("round trip") {
    UniPoly a = P("1 - t - t^2 - t^3"), b = P("1 - t");
    auto [q, r] = divrem(a, b);
    CHECK(q == P("t^2 + 2*t + 3"));
    CHECK(r == P("-2"));
    CHECK(q * b + r == a);
  }
  SUBCASE("self") {
    UniPoly a = P("3 - 2*z + 7/3*z^4");
    auto [q, r] = divrem(a, a);
    CHECK(q == P("1"));
    CHECK(r.is_zero());
  }
  CHECK_THROWS_AS(divrem(P("z"), UniPoly('z')), DomainError);
}

TEST_CASE("poly_gcd") {
  CHECK(gcd(P("1 - 2*z - 4*z^2 - 8*z^3"), P("1 - 2*z + 2*z^3")) == P("1"));
  UniPoly p = P("2 - 4*z + 6*z^3");
  CHECK(gcd(p, UniPoly('z')) == p.monic());
  CHECK(gcd(p * p, p) == p.monic());
  CHECK(associates(gcd(p * P("1 + z"), p * P("1 - z")), p));
  CHECK_THROWS_AS(gcd(UniPoly('z'), UniPoly('z')), DomainError);
}

TEST_CASE("inverse modulo") {
  UniPoly m = P("1 - 2*z - 4*z^2");
  UniPoly a = P("1 - z");
  UniPoly inv = inverse_mod(a, m);
  CHECK(divrem(a * inv, m).second == P("1"));
  CHECK(inverse_mod(P("z"), P("z^2")).is_zero());
}

TEST_CASE("bivariate polynomials") {
  BiPoly d = parse_bipoly("1 - 2*x + x^2 - x*y - x^2*y + x^2*y^2");
  CHECK(d.outer_degree() == 2);
  CHECK(d.inner_degree() == 2);
  CHECK(d.coeff(2, 1) == -1);
  CHECK(d(Rational(1, 2), Rational(1, 3)) == Rational(1) - 1 + Rational(1, 4) - Rational(1, 6) - Rational(1, 12) + Rational(1, 36));
  BiPoly s = d.swapped();
  CHECK(s.outer() == 'y');
  CHECK(s.coeff(1, 2) == -1);
  CHECK(s.swapped() == d);
  CHECK_THROWS_AS(parse_bipoly("x + y") + parse_bipoly("t + z", 't', 'z'), DomainError);
}

TEST_CASE("factored rational functions normalize factors") {
  UniRatFunc f(3, {{P("2 - 4*z"), 1}}, {{P("-1 + z"), 2}, {P("5"), 1}});
  // 3 * 2(1 - 2z) / ((1 - z)^2 * 5)
  CHECK(f.constant() == Rational(6, 5));
  REQUIRE(f.numer_factors().size() == 1);
  CHECK(f.numer_factors()[0].poly == P("1 - 2*z"));
  REQUIRE(f.denom_factors().size() == 1);
  CHECK(f.denom_factors()[0].poly == P("1 - z"));
  CHECK(f.denom_factors()[0].mult == 2);

  UniRatFunc g = f * UniRatFunc::from_poly(P("1 - z"));
  CHECK(g.denom_factors()[0].mult == 1);
  CHECK(UniRatFunc(0, {{P("1 + z"), 1}}, {}).is_zero());
  CHECK_THROWS_AS(UniRatFunc(1, {}, {{UniPoly('z'), 1}}), DomainError);
  CHECK(f(Rational(1, 3)) == Rational(6, 5) * Rational(1, 3) / (Rational(4, 9)));
  CHECK_THROWS_AS(f(Rational(1)), DomainError);
}

TEST_CASE("expand_to_single_fraction") {
  UniRatFunc f(1, {}, {{P("1 - z"), 1}, {P("1 - 2*z - 4*z^2"), 1}});
  auto [n, d] = f.expand();
  CHECK(n == P("1"));
  CHECK(d == P("1 - 3*z - 2*z^2 + 4*z^3"));

  auto [n2, d2] = UniRatFunc(Rational(3, 2)).expand();
  CHECK(n2 == UniPoly::constant(Rational(3, 2)));
  CHECK(d2 == P("1"));

  auto [n3, d3] = UniRatFunc(1, {{P("z^2"), 1}, {P("1"), 1}}, {}).expand();
  CHECK(n3 == P("z^2"));
  CHECK(d3 == P("1"));
}

TEST_CASE("reduced form divides out the gcd") {
  UniRatFunc f = UniRatFunc::ratio(P("1 - z^2"), P("1 - 3*z + 2*z^2"));
  UniRatFunc r = reduced_form(f);
  auto [n, d] = r.expand();
  CHECK(n == P("1 + z"));
  CHECK(d == P("1 - 2*z"));
}

TEST_CASE("compose_rational") {
  const BiPoly xy = BiPoly::monomial(1, 1, 1);
  const BiPoly one_minus_x = parse_bipoly("1 - x");

  SUBCASE("identity function") {
    BiRatFunc g = compose_rational(parse_uni_ratfunc("w"), xy, one_minus_x);
    REQUIRE(g.numer_factors().size() == 1);
    CHECK(g.numer_factors()[0].poly == xy);
    REQUIRE(g.denom_factors().size() == 1);
    CHECK(g.denom_factors()[0].poly == one_minus_x);
  }
  SUBCASE("Fibonacci function") {
    BiRatFunc g = compose_rational(parse_uni_ratfunc("w/(1 - w - w^2)"), xy, one_minus_x);
    BiRatFunc expected = parse_bi_ratfunc("x*y*(1 - x)/((1 - x)^2 - x*y*(1 - x) - x^2*y^2)");
    CHECK(same_function(g, expected));
    BiPoly::point_type at{Rational(1, 7), Rational(1, 5)};
    CHECK(g(at) == Rational(30, 869));
  }
  SUBCASE("univariate substitution") {
    UniRatFunc f = parse_uni_ratfunc("z^3/(1 - z - z^2 - z^3)");
    UniRatFunc g = compose_rational(f, UniPoly('x', {0, -1}), UniPoly('x', {1, -1}));
    CHECK(same_function(g, parse_uni_ratfunc("-x^3/(1 - 2*x + 2*x^3)")));
  }
  CHECK_THROWS_AS(compose_rational(parse_uni_ratfunc("w"), xy, BiPoly('x', 'y')), DomainError);
}
