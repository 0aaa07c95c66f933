#pragma once

#include <stdexcept>
#include <string>

namespace mockq {

/// Caller violated a precondition (mismatched fields, bad sizes, unknown names).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator binomial specialized to the zero series.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degree summation did not settle below the requested truncation before the cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mockq
