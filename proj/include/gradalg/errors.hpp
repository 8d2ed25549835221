#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

// A constructed object or computed result violates a structural invariant
// (grading compatibility, associativity, ideal closure, ...).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input document. The message carries the offending location.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would exceed a configured size cap.
struct ResourceCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace gradalg
