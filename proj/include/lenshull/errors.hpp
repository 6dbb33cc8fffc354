#pragma once

#include <stdexcept>
#include <string>

namespace lenshull {

// An identity that holds for all valid inputs failed; indicates a caller
// bug or broken preconditions, never bad user input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Slope p/q with p in {1, q-1} requested without the extra-pair flags:
// the orbit is a plane polygon and carries no tetrahedral facets.
struct ExcludedSlope : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace lenshull
