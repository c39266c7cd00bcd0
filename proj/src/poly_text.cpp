#include "gfdiag/poly_text.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>

#include "gfdiag/error.hpp"

namespace gfdiag {

namespace {

// ---------------------------------------------------------------------------
// Printing

void append_term(std::string& out, bool first, const Rational& c, const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  Rational mag = abs(c);
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (monomial.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += monomial;
  }
}

std::string power_of(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

template <class P>
std::string factor_text(const Factor<P>& f) {
  std::string s = to_string(f.poly);
  const bool single_term = s.find(' ') == std::string::npos && s[0] != '-';
  const bool atom = s.find_first_of("*^") == std::string::npos;
  if (!single_term || (f.mult > 1 && !atom)) s = "(" + s + ")";
  if (f.mult > 1) s += "^" + std::to_string(f.mult);
  return s;
}

template <class P>
std::string ratfunc_text(const FactoredRatFunc<P>& f) {
  if (f.is_zero()) return "0";
  std::string num;
  const auto& numer = f.numer_factors();
  if (numer.empty()) {
    num = to_string(f.constant());
  } else {
    if (f.constant() == -1)
      num = "-";
    else if (f.constant() != 1)
      num = to_string(f.constant()) + "*";
    for (std::size_t i = 0; i < numer.size(); ++i) num += (i ? "*" : "") + factor_text(numer[i]);
  }
  const auto& denom = f.denom_factors();
  if (denom.empty()) return num;
  std::string den;
  for (std::size_t i = 0; i < denom.size(); ++i) den += (i ? "*" : "") + factor_text(denom[i]);
  if (denom.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

// ---------------------------------------------------------------------------
// Parsing: evaluate the expression into factored form over sparse
// polynomials in the five admissible variables, then convert.

constexpr std::string_view kVars = "xyztw";
using Exponent = std::array<int, 5>;

struct MPoly {
  std::map<Exponent, Rational> terms;

  static MPoly constant(const Rational& c) {
    MPoly p;
    if (!gfdiag::is_zero(c)) p.terms[Exponent{}] = c;
    return p;
  }
  static MPoly variable(std::size_t idx) {
    MPoly p;
    Exponent e{};
    e[idx] = 1;
    p.terms[e] = 1;
    return p;
  }
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exponent{}); }
  Rational constant_value() const { return terms.empty() ? Rational(0) : terms.begin()->second; }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms) {
      Rational v = r.terms[e] + c;
      if (gfdiag::is_zero(v))
        r.terms.erase(e);
      else
        r.terms[e] = v;
    }
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        Exponent e;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.terms[e] += ca * cb;
      }
    std::erase_if(r.terms, [](const auto& kv) { return gfdiag::is_zero(kv.second); });
    return r;
  }
  MPoly scaled(const Rational& s) const {
    MPoly r;
    if (gfdiag::is_zero(s)) return r;
    for (const auto& [e, c] : terms) r.terms[e] = c * s;
    return r;
  }
  MPoly pow(int e) const {
    MPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;
};

struct MFactor {
  MPoly poly;
  int mult;
};

struct Expr {
  Rational constant = 1;
  std::vector<MFactor> numer;
  std::vector<MFactor> denom;

  static Expr of_constant(const Rational& c) {
    Expr e;
    e.constant = c;
    return e;
  }
  static Expr of_poly(const MPoly& p) {
    if (p.is_constant()) return of_constant(p.constant_value());
    Expr e;
    Rational lead = p.terms.begin()->second;
    e.constant = lead;
    e.numer.push_back({p.scaled(1 / lead), 1});
    return e;
  }
  bool is_zero() const { return gfdiag::is_zero(constant); }
};

void merge_into(std::vector<MFactor>& list, const MFactor& f) {
  for (auto& g : list)
    if (g.poly == f.poly) {
      g.mult += f.mult;
      return;
    }
  list.push_back(f);
}

Expr simplify(Expr e) {
  for (auto& n : e.numer)
    for (auto& d : e.denom)
      if (n.poly == d.poly) {
        int common = std::min(n.mult, d.mult);
        n.mult -= common;
        d.mult -= common;
      }
  std::erase_if(e.numer, [](const MFactor& f) { return f.mult == 0; });
  std::erase_if(e.denom, [](const MFactor& f) { return f.mult == 0; });
  if (e.is_zero()) {
    e.numer.clear();
    e.denom.clear();
  }
  return e;
}

Expr multiply(const Expr& a, const Expr& b) {
  Expr r = a;
  r.constant *= b.constant;
  for (const auto& f : b.numer) merge_into(r.numer, f);
  for (const auto& f : b.denom) merge_into(r.denom, f);
  return simplify(r);
}

Expr invert(const Expr& a) {
  if (a.is_zero()) throw DomainError("division by zero in expression");
  Expr r;
  r.constant = 1 / a.constant;
  r.numer = a.denom;
  r.denom = a.numer;
  return r;
}

Expr power(const Expr& a, int e) {
  Expr r = Expr::of_constant(1);
  for (int i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

MPoly product(const std::vector<MFactor>& list) {
  MPoly p = MPoly::constant(1);
  for (const auto& f : list) p = p * f.poly.pow(f.mult);
  return p;
}

// Cofactor of `part` in the common denominator `common`.
MPoly cofactor(const std::vector<MFactor>& common, const std::vector<MFactor>& part) {
  MPoly p = MPoly::constant(1);
  for (const auto& f : common) {
    int have = 0;
    for (const auto& g : part)
      if (g.poly == f.poly) have = g.mult;
    p = p * f.poly.pow(f.mult - have);
  }
  return p;
}

Expr add(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<MFactor> common = a.denom;
  for (const auto& f : b.denom) {
    bool found = false;
    for (auto& g : common)
      if (g.poly == f.poly) {
        g.mult = std::max(g.mult, f.mult);
        found = true;
      }
    if (!found) common.push_back(f);
  }
  MPoly num = product(a.numer).scaled(a.constant) * cofactor(common, a.denom) +
              product(b.numer).scaled(b.constant) * cofactor(common, b.denom);
  Expr r = Expr::of_poly(num);
  r.denom = common;
  return simplify(r);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expression() {
    Expr acc = term();
    while (true) {
      if (accept('+'))
        acc = add(acc, term());
      else if (accept('-')) {
        Expr rhs = term();
        rhs.constant = -rhs.constant;
        acc = add(acc, rhs);
      } else
        return acc;
    }
  }

  Expr term() {
    Expr acc = unary();
    while (true) {
      if (accept('*'))
        acc = multiply(acc, unary());
      else if (accept('/'))
        acc = multiply(acc, invert(unary()));
      else
        return acc;
    }
  }

  Expr unary() {
    if (accept('-')) {
      Expr e = unary();
      e.constant = -e.constant;
      return e;
    }
    if (accept('+')) return unary();
    return power_expr();
  }

  Expr power_expr() {
    Expr base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      return power(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::of_constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    auto idx = kVars.find(c);
    if (idx != std::string_view::npos) {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("unknown identifier");
      return Expr::of_poly(MPoly::variable(idx));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string used_vars(const Expr& e) {
  std::array<bool, 5> used{};
  auto scan = [&](const std::vector<MFactor>& list) {
    for (const auto& f : list)
      for (const auto& [ex, c] : f.poly.terms)
        for (std::size_t i = 0; i < ex.size(); ++i)
          if (ex[i] > 0) used[i] = true;
  };
  scan(e.numer);
  scan(e.denom);
  std::string out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out += kVars[i];
  return out;
}

std::size_t var_index(char v) {
  auto idx = kVars.find(v);
  if (idx == std::string_view::npos) throw ParseError(std::string("unsupported variable '") + v + "'");
  return idx;
}

UniPoly to_unipoly(const MPoly& p, char var) {
  std::size_t vi = var_index(var);
  std::vector<Rational> c;
  for (const auto& [e, coef] : p.terms) {
    std::size_t d = static_cast<std::size_t>(e[vi]);
    if (c.size() <= d) c.resize(d + 1);
    c[d] += coef;
  }
  return UniPoly(var, std::move(c));
}

BiPoly to_bipoly(const MPoly& p, char outer, char inner) {
  std::size_t oi = var_index(outer), ii = var_index(inner);
  BiPoly r(outer, inner);
  for (const auto& [e, coef] : p.terms) r += BiPoly::monomial(coef, e[oi], e[ii], outer, inner);
  return r;
}

template <class Convert>
auto convert(const Expr& e, Convert conv) {
  using P = decltype(conv(MPoly{}));
  std::vector<Factor<P>> numer, denom;
  for (const auto& f : e.numer) numer.push_back({conv(f.poly), f.mult});
  for (const auto& f : e.denom) denom.push_back({conv(f.poly), f.mult});
  return FactoredRatFunc<P>(e.constant, std::move(numer), std::move(denom));
}

}  // namespace

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    append_term(out, first, c, power_of(p.var(), i));
    first = false;
  }
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.outer_degree(); ++i) {
    const UniPoly& row = p.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j) {
      const Rational& c = row.coeffs()[static_cast<std::size_t>(j)];
      if (is_zero(c)) continue;
      std::string mono = power_of(p.outer(), i);
      std::string in = power_of(p.inner(), j);
      if (!mono.empty() && !in.empty()) mono += "*";
      mono += in;
      append_term(out, first, c, mono);
      first = false;
    }
  }
  return out;
}

std::string to_string(const UniRatFunc& f) { return ratfunc_text(f); }
std::string to_string(const BiRatFunc& f) { return ratfunc_text(f); }

UniRatFunc parse_uni_ratfunc(std::string_view text, char var) {
  Expr e = Parser(text).parse();
  std::string vars = used_vars(e);
  if (vars.size() > 1) throw ParseError("expected a univariate expression, found variables '" + vars + "'");
  if (var == 0) var = vars.empty() ? 'z' : vars[0];
  if (!vars.empty() && vars[0] != var)
    throw ParseError(std::string("expected variable '") + var + "', found '" + vars + "'");
  return convert(e, [var](const MPoly& p) { return to_unipoly(p, var); });
}

BiRatFunc parse_bi_ratfunc(std::string_view text, char outer, char inner) {
  Expr e = Parser(text).parse();
  for (char v : used_vars(e))
    if (v != outer && v != inner)
      throw ParseError(std::string("unexpected variable '") + v + "' (expected " + outer + ", " + inner + ")");
  return convert(e, [outer, inner](const MPoly& p) { return to_bipoly(p, outer, inner); });
}

UniPoly parse_unipoly(std::string_view text, char var) {
  UniRatFunc f = parse_uni_ratfunc(text, var);
  if (!f.denom_factors().empty()) throw ParseError("expected a polynomial: '" + std::string(text) + "'");
  UniPoly p = f.expand().first;
  if (var != 0) p = p.with_var(var);
  return p;
}

BiPoly parse_bipoly(std::string_view text, char outer, char inner) {
  BiRatFunc f = parse_bi_ratfunc(text, outer, inner);
  if (!f.denom_factors().empty()) throw ParseError("expected a polynomial: '" + std::string(text) + "'");
  BiPoly p = f.expand().first;
  return p.is_constant() ? BiPoly::constant(p.constant_value(), outer, inner) : p;
}

std::string variables_of(std::string_view text) { return used_vars(Parser(text).parse()); }

}  // namespace gfdiag
