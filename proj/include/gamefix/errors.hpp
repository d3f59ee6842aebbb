#pragma once

#include <stdexcept>
#include <string>

namespace gamefix {

// Error taxonomy used across the library. The CLI maps these to exit codes:
// ParseError -> 1, DomainError -> 2, ConvergenceError -> 3.

// Malformed textual input (game files, chain files, command-line values).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates an operation's domain
// (wrong arity, negative payoffs, out-of-range indices, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative numerical computation failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}
