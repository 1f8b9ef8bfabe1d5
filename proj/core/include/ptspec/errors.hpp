#pragma once

#include <stdexcept>
#include <string>

namespace ptspec {

/// Bad potential description (unknown model, non-positive depth, ...).
struct InvalidSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Bad solver configuration or incompatible method/model combination.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Non-finite values during ODE integration (energy too deep, step too large).
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigenvalue iteration failed to converge.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A quantity that must vanish identically came out non-zero.
struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptspec
