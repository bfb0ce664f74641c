#pragma once

#include <stdexcept>
#include <string>

namespace rnspectra {

/// Bad input data or a violated call contract (maps to CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: indefinite matrix, non-convergent solve (CLI exit code 2).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rnspectra
