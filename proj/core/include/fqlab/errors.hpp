#pragma once

#include <stdexcept>
#include <string>

namespace fqlab {

/// Invalid argument or operation outside the mathematical domain
/// (inverting zero, dividing by the zero polynomial, q != p where q = p is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result depends on digits below a series' precision floor.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured point budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The hypotheses of a checked statement are not met by the supplied instance.
/// Kept apart from a failed conclusion so callers can tell the two apart.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fqlab
