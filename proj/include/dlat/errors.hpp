#pragma once

#include <stdexcept>
#include <string>

namespace dlat {

/// A caller violated a documented precondition (bad argument, wrong shape).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// An internal consistency check failed. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dlat
