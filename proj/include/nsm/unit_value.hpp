#pragma once

#include <compare>
#include <string>

#include "nsm/errors.hpp"

namespace nsm {

/// A membership degree in the closed unit interval [0, 1].
class UnitValue {
 public:
  constexpr UnitValue() = default;

  explicit UnitValue(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ValidationError("value " + std::to_string(value) +
                            " is outside [0, 1]");
    }
  }

  [[nodiscard]] double get() const noexcept { return value_; }

  auto operator<=>(const UnitValue&) const = default;

  /// Wraps the result of arithmetic that mathematically stays in [0, 1],
  /// absorbing sub-ulp rounding excursions past either endpoint.
  static UnitValue clamped(double value) noexcept {
    UnitValue result;
    result.value_ = value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
    return result;
  }

 private:
  double value_ = 0.0;
};

inline UnitValue min(UnitValue a, UnitValue b) noexcept { return b < a ? b : a; }
inline UnitValue max(UnitValue a, UnitValue b) noexcept { return a < b ? b : a; }

}  // namespace nsm
