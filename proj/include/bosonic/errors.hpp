#pragma once

#include <stdexcept>
#include <string>

namespace bosonic {

/// Raised when a formula that divides by (m - 1) is evaluated with one mode.
class DegenerateModesError : public std::domain_error {
 public:
  explicit DegenerateModesError(const std::string& what)
      : std::domain_error("degenerate single-mode system: " + what) {}
};

/// Raised when a numerical routine fails to reach its target tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bosonic
