#pragma once

#include <stdexcept>
#include <string>

namespace mapart {

/// Raised for malformed input or requests that violate an operation's
/// preconditions. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (exit code 2).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact division was requested but the divisor does not divide.
class NotDivisible : public Error {
 public:
  NotDivisible() : Error("not divisible") {}
};

}  // namespace mapart
