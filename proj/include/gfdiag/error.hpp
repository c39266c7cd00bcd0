#pragma once

#include <stdexcept>
#include <string>

namespace gfdiag {

/// Malformed textual input (polynomials, rationals, id lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid request: division by zero, pole at the origin,
/// mismatched variables.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The residue computation cannot proceed for the given pole layout
/// (repeated kept factor, shared roots with another factor, ...).
class DegeneratePoleError : public DomainError {
 public:
  explicit DegeneratePoleError(const std::string& what)
      : DomainError("degenerate pole configuration: " + what) {}
};

}  // namespace gfdiag
