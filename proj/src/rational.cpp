#include "gfdiag/rational.hpp"

#include <cctype>

#include "gfdiag/error.hpp"

namespace gfdiag {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  auto slash = s.find('/');
  std::string_view num = strip(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : strip(s.substr(slash + 1));
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (strip(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Integer> pascal_row(unsigned n) {
  std::vector<Integer> row{1};
  row.reserve(n + 1);
  for (unsigned i = 1; i <= n; ++i) {
    row.push_back(1);
    for (unsigned k = i - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

}  // namespace gfdiag
