#pragma once

#include <string>
#include <vector>

#include "gfdiag/factored.hpp"
#include "gfdiag/series.hpp"

namespace gfdiag {

/// P(var)/(1 - sum_i coeffs[i] var^(i+1)) with P fixed by the initial terms.
UniRatFunc sequence_gf(const SequenceSpec& spec, char var = 'z');

enum class Provenance { derived, printed };

/// Bivariate generating function sum_{n,m} h[n][m] x^n y^m of the binomial
/// convolution h[n][m] = sum_k C(n,k) a_k b_{m-k}.
struct ConvolutionGF {
  BiRatFunc function;
  SequenceSpec a;
  SequenceSpec b;
  Provenance provenance = Provenance::derived;
};

/// B(y) * 1/(1-x) * A(w) at w = x*y/(1-x), where A, B are the generating
/// functions of a and b. Built from the summation identity
///   sum_n C(n,k) x^n = x^k/(1-x)^(k+1),
/// never from a transcribed display.
ConvolutionGF build_convolution_gf(const SequenceSpec& a, const SequenceSpec& b);

/// Transcribed generating functions and named constructions, keyed by
/// stable ids (fib.H.printed, fib.diag.printed, trib.G, ...). Throws
/// std::out_of_range for unknown ids.
BiRatFunc catalog_bivariate(const std::string& id);
UniRatFunc printed_gf(const std::string& id);

bool is_bivariate_catalog_id(const std::string& id);
bool is_univariate_catalog_id(const std::string& id);

struct CatalogEntry {
  std::string id;
  std::string description;
  bool bivariate;
};
const std::vector<CatalogEntry>& gf_catalog();

}  // namespace gfdiag
