#include "gfdiag/gf_builder.hpp"

#include <stdexcept>

#include "gfdiag/poly_text.hpp"

namespace gfdiag {

UniRatFunc sequence_gf(const SequenceSpec& spec, char var) {
  const std::size_t k = spec.order();
  std::vector<Rational> den(k + 1);
  den[0] = 1;
  for (std::size_t i = 0; i < k; ++i) den[i + 1] = -spec.coeffs[i];
  std::vector<Rational> num(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational v = spec.initial[j];
    for (std::size_t i = 1; i <= j; ++i) v -= spec.coeffs[i - 1] * spec.initial[j - i];
    num[j] = v;
  }
  return UniRatFunc(1, {{UniPoly(var, num), 1}}, {{UniPoly(var, den), 1}});
}

ConvolutionGF build_convolution_gf(const SequenceSpec& a, const SequenceSpec& b) {
  UniRatFunc a_gf = sequence_gf(a, 'w');
  UniRatFunc b_gf = sequence_gf(b, 'y');

  // B(y) lifted to (x, y).
  std::vector<Factor<BiPoly>> numer, denom;
  for (const auto& f : b_gf.numer_factors()) numer.push_back({BiPoly::from_inner(f.poly, 'x'), f.mult});
  for (const auto& f : b_gf.denom_factors()) denom.push_back({BiPoly::from_inner(f.poly, 'x'), f.mult});
  BiRatFunc result(b_gf.constant(), std::move(numer), std::move(denom));

  const BiPoly one_minus_x = BiPoly::constant(1) - BiPoly::monomial(1, 1, 0);
  result /= BiRatFunc::from_poly(one_minus_x);
  result *= compose_rational(a_gf, BiPoly::monomial(1, 1, 1), one_minus_x);
  return {result, a, b, Provenance::derived};
}

namespace {

struct Entry {
  const char* id;
  const char* description;
  const char* text;  // empty for constructed entries
  bool bivariate;
};

// Displays transcribed verbatim, in factored form.
const Entry kEntries[] = {
    {"fib.H.printed", "Fibonacci double generating function as displayed (x: n, y: m)",
     "x*y^2/((1 - 2*x + x^2 - x*y - x^2*y + x^2*y^2)*(1 - y - y^2))", true},
    {"fib.H.derived", "Fibonacci double generating function built from the summation chain", "", true},
    {"trib.G", "shifted-Tribonacci (z/(1-z-z^2-z^3)) double generating function", "", true},
    {"trib.G.unit", "unit-start Tribonacci (1/(1-z-z^2-z^3)) double generating function", "", true},
    {"tetra.G", "shifted-Tetranacci double generating function", "", true},
    {"penta.G", "shifted-Pentanacci double generating function", "", true},
    {"fib.H.transform.printed", "displayed H(zt,1/t)/t (outer t, inner z)",
     "z/((1 - 2*z*t + z^2*t^2 - z + t*z^2 - z^2)*(t^2 - t - 1))", true},
    {"fib.diag.printed", "Fibonacci diagonal as displayed", "z^2/((1 - z)*(1 - 2*z - 4*z^2))", false},
    {"fib.decomposition.printed", "displayed partial fractions, conjugate pair summed over Q",
     "-2/5/(1 - z) + 1/5*(2 - 2*z)/(1 - 2*z - 4*z^2)", false},
    {"trib.diag.printed", "Tribonacci diagonal as displayed (two-term form)",
     "1/11*(1 + z + 10*z^2)/(1 - 2*z - 4*z^2 - 8*z^3) - 1/11*(1 + z - 8*z^2)/(1 - 2*z + 2*z^3)", false},
    {"trib.first_term", "first displayed summand", "1/11*(1 + z + 10*z^2)/(1 - 2*z - 4*z^2 - 8*z^3)", false},
    {"trib.second_term", "second displayed summand without its sign", "1/11*(1 + z - 8*z^2)/(1 - 2*z + 2*z^3)",
     false},
    {"trib.U", "generating function of U_n", "1/(1 - 2*z + 2*z^3)", false},
    {"tetra.diag.printed", "Tetranacci diagonal as displayed",
     "2*z^2*(-z^3 - 2*z^4 + 8*z^5 + 6*z^6 + 4*z^7 + 1 - 2*z - z^2)/((16*z^4 + 8*z^3 + 4*z^2 + 2*z - 1)*"
     "(z^6 + 6*z^5 - 4*z^4 - 3*z^3 - z^2 + 3*z - 1))",
     false},
    {"penta.diag.printed", "next instance as displayed",
     "-2*z^2*(-z^3 - z^4 - 25*z^6 + 19*z^8 + 52*z^10 + 40*z^9 - 1 + 3*z)/((32*z^5 + 16*z^4 + 8*z^3 + 4*z^2 + "
     "2*z - 1)*(4*z^10 - 4*z^9 - 15*z^8 - 12*z^7 + 25*z^6 - 2*z^4 - 4*z^3 - 3*z^2 + 4*z - 1))",
     false},
};

const Entry* find_entry(const std::string& id) {
  for (const auto& e : kEntries)
    if (id == e.id) return &e;
  return nullptr;
}

}  // namespace

const std::vector<CatalogEntry>& gf_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (const auto& e : kEntries) out.push_back({e.id, e.description, e.bivariate});
    return out;
  }();
  return catalog;
}

bool is_bivariate_catalog_id(const std::string& id) {
  const Entry* e = find_entry(id);
  return e != nullptr && e->bivariate;
}

bool is_univariate_catalog_id(const std::string& id) {
  const Entry* e = find_entry(id);
  return e != nullptr && !e->bivariate;
}

BiRatFunc catalog_bivariate(const std::string& id) {
  const Entry* e = find_entry(id);
  if (e == nullptr || !e->bivariate) throw std::out_of_range("unknown bivariate catalog id: " + id);
  if (id == "fib.H.derived") {
    auto fib = kbonacci(2, IndexConvention::shifted);
    return build_convolution_gf(fib, fib).function;
  }
  if (id == "trib.G" || id == "trib.G.unit") {
    auto trib = kbonacci(3, id == "trib.G" ? IndexConvention::shifted : IndexConvention::unit_start);
    return build_convolution_gf(trib, trib).function;
  }
  if (id == "tetra.G" || id == "penta.G") {
    auto seq = kbonacci(id == "tetra.G" ? 4 : 5, IndexConvention::shifted);
    return build_convolution_gf(seq, seq).function;
  }
  if (id == "fib.H.transform.printed") return parse_bi_ratfunc(e->text, 't', 'z');
  return parse_bi_ratfunc(e->text, 'x', 'y');
}

UniRatFunc printed_gf(const std::string& id) {
  const Entry* e = find_entry(id);
  if (e == nullptr || e->bivariate) throw std::out_of_range("unknown univariate catalog id: " + id);
  return parse_uni_ratfunc(e->text, 'z');
}

}  // namespace gfdiag
