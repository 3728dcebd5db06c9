#pragma once

#include <stdexcept>
#include <string>

namespace rabi {

// Library failures fall into three families; the CLI maps each to its own
// exit status. Plain argument errors use std::invalid_argument.

/// Bad or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: eigensolver breakdown, truncation too small,
/// convergence budget exhausted.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fock basis too small to hold a state to the requested tail precision.
class TruncationError : public NumericError {
 public:
  TruncationError(const std::string& what, double tail_mass)
      : NumericError(what), tail_mass_(tail_mass) {}
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double tail_mass_;
};

/// Parameters outside the double-well regime (4 lambda^2 <= Omega omega0),
/// or outside the validity range of a closed-form estimate.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rabi
