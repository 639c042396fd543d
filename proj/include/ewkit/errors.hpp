#pragma once

#include <stdexcept>
#include <string>

namespace ewkit {

// Malformed or out-of-contract input: bad file, wrong shape, invalid
// parameter. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but fails a mathematical precondition (e.g. the wrong
// characteristic polynomial for a construction). Maps to a FAIL certificate
// and CLI exit code 1.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A theorem-backed assertion failed: either the library has a bug or the
// input was adversarially mislabeled. Maps to CLI exit code 2.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ewkit
