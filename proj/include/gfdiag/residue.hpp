#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfdiag/factored.hpp"

namespace gfdiag {

/// F(z*t, 1/t)/t written as numerator / prod(denom_factors^mult) with all
/// polynomials in (outer t, inner z). A leftover negative power of t is
/// stored as the denominator factor t^k.
struct HKTransformed {
  BiPoly numerator;
  std::vector<Factor<BiPoly>> denom_factors;
  /// t-power pulled out of each factor of F while clearing 1/t: numerator
  /// factors first, then denominator factors, in F's order.
  std::vector<int> cleared_t_powers;

  Rational operator()(const Rational& t, const Rational& z) const;
};

HKTransformed hk_transform(const BiRatFunc& f);

/// A denominator factor of an HKTransformed that depends on t.
struct PoleClass {
  std::size_t factor_index = 0;  // into HKTransformed::denom_factors
  BiPoly factor;
  int multiplicity = 1;
  bool kept = false;
  /// some roots stay bounded and others escape as z -> 0; the residue sum
  /// over such a factor is not covered by the rational construction
  bool split = false;
  /// leading t-coefficient evaluated at z = 0
  Rational reason;

  int degree() const { return factor.outer_degree(); }
  bool is_origin() const;
};

/// Keep a factor iff its leading t-coefficient is nonzero at z = 0 (its
/// roots stay bounded as z -> 0). A discarded factor that keeps positive
/// t-degree at z = 0 is marked split. Factors free of t are not poles and are
/// not listed.
std::vector<PoleClass> classify_poles(const HKTransformed& h);

/// Sum of the residues of h over all roots of the kept factor, as a
/// rational function of z. Computed as the trace of multiplication by
/// N / (p' * Q) in Q(z)[t]/(p); for the factor t^k it is the Laurent
/// coefficient [t^(k-1)] N/Q instead. Throws DegeneratePoleError.
UniRatFunc residue_trace(const HKTransformed& h, const PoleClass& pole);

enum class DiagonalStatus { ok, method_assumption_violated };

struct DiagnosticReport {
  std::vector<PoleClass> poles;
  DiagonalStatus status = DiagonalStatus::ok;
  std::size_t checked_terms = 0;
  std::optional<std::size_t> first_mismatch;
  Rational residue_value;  // series coefficient of the residue result
  Rational series_value;   // coefficient from the bivariate expansion
};

struct DiagonalResult {
  UniRatFunc gf;
  DiagnosticReport report;
};

/// Diagonal via residues, cross-checked against diagonal_series for
/// `check_terms` coefficients.
DiagonalResult diagonal_rational(const BiRatFunc& f, std::size_t check_terms = 100);

/// Polynomial part plus one proper fraction per supplied denominator
/// factor power; the supplied factors must be pairwise coprime.
struct PartialFraction {
  UniPoly numerator;
  UniPoly factor;
  int power = 1;
};

struct PartialFractions {
  UniPoly polynomial_part;
  std::vector<PartialFraction> parts;

  /// Sum of all parts as one factored function (for re-summation checks).
  UniRatFunc sum() const;
};

PartialFractions partial_fractions_q(const UniRatFunc& f);

std::string to_string(DiagonalStatus s);

}  // namespace gfdiag
