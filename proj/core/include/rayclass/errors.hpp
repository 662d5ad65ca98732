#pragma once

#include <stdexcept>
#include <string>

namespace rayclass {

// Error taxonomy; the CLI maps these onto exit codes.
struct invalid_argument_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-arithmetic preconditions violated (dependent generators, ties, ...)
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a certified numeric could not reach its target error bound
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rayclass
