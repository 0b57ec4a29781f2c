#pragma once

#include <stdexcept>
#include <string>

namespace polystrata {

// Caller supplied something outside an operation's domain (bad parity,
// malformed composition, out-of-range parameter).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal mathematical invariant failed: d∘d != 0, a closure law, a
// non-antisymmetric orbit relation, disagreeing homology backends.  These
// indicate a bug or a genuinely false conjecture, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polystrata
