#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qbern {

// Exact-arithmetic domain violation: division by zero, gcd(0, 0), ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a point where the reduced denominator vanishes.
// `point` is the offending value of q, rendered as a fraction string;
// `coefficient_index` identifies the coefficient for polynomial-wide
// evaluations (-1 when not applicable).
class PoleError : public DomainError {
 public:
  PoleError(const std::string& msg, std::string point, int coefficient_index = -1)
      : DomainError(msg), point_(std::move(point)), index_(coefficient_index) {}

  const std::string& point() const noexcept { return point_; }
  int coefficient_index() const noexcept { return index_; }

 private:
  std::string point_;
  int index_;
};

// Arguments outside an operation's contract (bad ranges, unknown tags,
// mismatched lengths).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency guarantee failed, e.g. a linear system that is
// provably invertible turned out singular.  Always a bug, never user error.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qbern
