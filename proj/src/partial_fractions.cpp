#include "gfdiag/residue.hpp"

#include "gfdiag/error.hpp"

namespace gfdiag {

UniRatFunc PartialFractions::sum() const {
  // Common denominator: product of all part denominators.
  UniPoly den = UniPoly::constant(1);
  std::vector<Factor<UniPoly>> denom;
  for (const auto& part : parts) {
    UniPoly q = part.factor.pow(static_cast<unsigned>(part.power));
    den *= q;
    denom.push_back({part.factor, part.power});
  }
  UniPoly num = polynomial_part * den;
  for (const auto& part : parts) {
    UniPoly cofactor = divrem(den, part.factor.pow(static_cast<unsigned>(part.power))).first;
    num += part.numerator * cofactor;
  }
  return UniRatFunc(1, {{num, 1}}, std::move(denom));
}

PartialFractions partial_fractions_q(const UniRatFunc& f) {
  const auto& factors = f.denom_factors();
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (gcd(factors[i].poly, factors[j].poly).degree() > 0)
        throw DomainError("denominator factors are not pairwise coprime: (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");

  auto [num, den] = f.expand();
  PartialFractions out;
  auto [poly_part, rem] = divrem(num, den);
  out.polynomial_part = poly_part;

  // rem/den = sum_j P_j/Q_j with P_j = rem * (den/Q_j)^(-1) mod Q_j.
  for (const auto& fac : factors) {
    UniPoly q = fac.poly.pow(static_cast<unsigned>(fac.mult));
    UniPoly cofactor = divrem(den, q).first;
    UniPoly inv = inverse_mod(cofactor, q);
    UniPoly p = divrem(rem * inv, q).second;
    out.parts.push_back({p, fac.poly, fac.mult});
  }
  return out;
}

}  // namespace gfdiag
