#pragma once

#include <stdexcept>
#include <string>

namespace bott {

/// Malformed or out-of-range input: bad JSON, bad indices, dimension mismatch.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input that violates a mathematical precondition, e.g. asking
/// for the partition invariant of a ring that is not Q-trivial.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal consistency check failed (a proven identity did not hold).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration or search exceeded its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bott
