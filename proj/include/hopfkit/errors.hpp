#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

// Raised for malformed user input (files, CLI arguments). The CLI maps this
// to exit code 2. Everything else (std::invalid_argument for precondition
// violations, std::logic_error for broken internal invariants) signals a
// caller or implementation bug.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hopfkit
