#pragma once

#include <stdexcept>
#include <string>

namespace shepade {

/// Numerical failure: non-convergence, evaluation at a pole, degenerate input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (planet documents, report parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shepade
