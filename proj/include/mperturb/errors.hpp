#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mperturb {

/// Raised when an input violates a documented precondition. The message names
/// the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or name-resolution failure while reading a polynomial.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what + " (at offset " + std::to_string(position) + ")"),
        reason_(what),
        position_(position) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// A Groebner computation ran past its reduction-step budget. Results are never
/// silently truncated; callers either raise the budget or record the failure.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A proven identity failed on a concrete instance. This always indicates a
/// defect in the library, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mperturb
