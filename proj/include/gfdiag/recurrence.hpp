#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gfdiag/factored.hpp"

namespace gfdiag {

/// a_n = sum_{i=1..r} coeffs[i-1] * a_{n-i} for n >= r, with a_0..a_{r-1}
/// given by `initial`.
struct LinearRecurrence {
  std::vector<Rational> coeffs;
  std::vector<Rational> initial;

  std::size_t order() const { return coeffs.size(); }
  std::vector<Rational> terms(std::size_t n) const;
  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// Minimal-order recurrence consistent with every supplied term
/// (Berlekamp-Massey over Q). Returns nullopt when the minimal order
/// exceeds floor(len/2). Requires at least 4 terms (std::invalid_argument).
std::optional<LinearRecurrence> find_min_recurrence(std::span<const Rational> terms);

/// Unused evidence: len - 2r. Larger is more convincing.
inline long evidence_margin(const LinearRecurrence& rec, std::size_t n_terms) {
  return static_cast<long>(n_terms) - 2 * static_cast<long>(rec.order());
}

/// P(var)/(1 - sum c_i var^i), deg P < r, constant term of the denominator 1.
UniRatFunc recurrence_to_gf(const LinearRecurrence& rec, char var = 'z');

struct AgreementReport {
  bool agrees = true;
  std::optional<std::size_t> first_mismatch;
  Rational expected;  // series coefficient at the mismatch
  Rational actual;    // supplied term at the mismatch
};

/// Compare the Taylor coefficients of f with `terms`, exactly.
AgreementReport certify_agreement(const UniRatFunc& f, std::span<const Rational> terms);

}  // namespace gfdiag
