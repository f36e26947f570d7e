#pragma once

#include <stdexcept>
#include <string>

namespace mdpkit {

/// Thrown when an iterative solver exhausts its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, int iterations, double last_residual)
      : std::runtime_error(what), iterations_(iterations), last_residual_(last_residual) {}

  int iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

 private:
  int iterations_;
  double last_residual_;
};

/// Thrown when a brute-force enumeration would exceed the sequence guard.
class EnumerationTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a value that must be finite is NaN or infinite.
class NonFiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mdpkit
