#pragma once

#include "nsm/unit_value.hpp"

namespace nsm {

/// A neutrosophic value: independent truth, indeterminacy and falsity
/// memberships. The three components are not tied by any normalization,
/// so 0 <= T + I + F <= 3.
struct NsValue {
  UnitValue truth;
  UnitValue indeterminacy;
  UnitValue falsity;

  /// The bottom element (0, 1, 1).
  static NsValue zero() noexcept {
    return {UnitValue::clamped(0.0), UnitValue::clamped(1.0), UnitValue::clamped(1.0)};
  }

  /// The top element (1, 0, 0).
  static NsValue universal() noexcept {
    return {UnitValue::clamped(1.0), UnitValue::clamped(0.0), UnitValue::clamped(0.0)};
  }

  bool operator==(const NsValue&) const = default;
};

/// How the indeterminacy component behaves under complement.
enum class ComplementMode {
  identity_i,    ///< (T, I, F) -> (F, I, T)
  one_minus_i,   ///< (T, I, F) -> (F, 1-I, T)
};

inline NsValue complement(const NsValue& v, ComplementMode mode) noexcept {
  UnitValue i = mode == ComplementMode::one_minus_i
                    ? UnitValue::clamped(1.0 - v.indeterminacy.get())
                    : v.indeterminacy;
  return {v.falsity, i, v.truth};
}

}  // namespace nsm
