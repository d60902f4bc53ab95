#pragma once

#include <stdexcept>

namespace gvm {

// Bad experiment configuration or parameter-range violation.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unreadable, malformed, or inconsistent data files.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training could not reach the stop cost within the step budget
// (after exhausting any growth schedule).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gvm
