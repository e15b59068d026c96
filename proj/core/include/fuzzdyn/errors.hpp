#pragma once

#include <stdexcept>

namespace fuzzdyn {

// Thrown when an operation needs exact forward interval images and the map
// does not provide them.
struct OracleMissingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a constructive routine fails its own re-verification. A throw
// here means a bug in the construction, never bad user input.
struct PostCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fuzzdyn
