#include "gfdiag/factored.hpp"

namespace gfdiag {

UniRatFunc reduced_form(const UniRatFunc& f) {
  if (f.is_zero()) return f;
  auto [num, den] = f.expand();
  UniPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divrem(num, g).first;
    den = divrem(den, g).first;
  }
  return UniRatFunc(1, {{num, 1}}, {{den, 1}});
}

}  // namespace gfdiag
