#pragma once

#include <stdexcept>

namespace nsm {

/// Input data violated a domain invariant (component outside [0,1],
/// duplicate or empty labels, malformed or mis-shaped documents).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation do not share the required
/// dimensions/label sequences.
class ShapeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A norm name outside the supported set.
class UnknownNormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nsm
