#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gfdiag {

enum class ClaimStatus { pass, fail };
enum class Expectation { pass, fail, either };

std::string to_string(ClaimStatus s);
std::string to_string(Expectation e);

/// Outcome of checking one displayed formula. lhs/rhs hold the two exact
/// values at first_mismatch on failure, and at the last compared index on
/// success.
struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::pass;
  std::optional<std::size_t> first_mismatch;
  std::string lhs;
  std::string rhs;
  std::string note;
  Expectation expected = Expectation::pass;
  long runtime_us = 0;

  bool matches_expectation() const;
  /// Equality ignoring runtime.
  bool same_outcome(const ClaimReport& o) const;
};

struct ClaimInfo {
  std::string id;  // base[variant]
  std::string description;
  Expectation expected;
  std::string expectation_note;
};

const std::vector<ClaimInfo>& claim_catalog();

/// Run the claims whose full id, or base id (the part before '['), equals
/// `id`. Throws std::out_of_range for unknown ids.
std::vector<ClaimReport> run_claim(const std::string& id, std::size_t n = 200);
std::vector<ClaimReport> run_all(std::size_t n = 200);

bool all_as_expected(const std::vector<ClaimReport>& reports);

}  // namespace gfdiag
