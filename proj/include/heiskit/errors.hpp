#pragma once

#include <stdexcept>
#include <string>

namespace heiskit {

// Bad arguments or malformed configuration. Mapped to CLI exit code 1.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested work exceeds a configured vertex/atom/entry budget. Exit code 2.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative method did not converge; carries the last iterate. Exit code 3.
struct ConvergenceError : std::runtime_error {
  double last_iterate;
  ConvergenceError(const std::string& what, double last)
      : std::runtime_error(what), last_iterate(last) {}
};

// Kernel evaluated on the zero chord (p == q). Distinct from ValidationError
// so matrix assembly can tell a genuine duplicate atom from a bad flag.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace heiskit
