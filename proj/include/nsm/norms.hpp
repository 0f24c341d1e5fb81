#pragma once

#include <array>
#include <string_view>

#include "nsm/unit_value.hpp"

namespace nsm {

/// The six supported dual t-norm / t-conorm families.
enum class NormId { drastic, bounded, einstein, algebraic, hamacher, minmax };

/// A t-norm together with its dual t-conorm, s(a,b) = 1 - t(1-a, 1-b).
///
/// Every pair satisfies the four t-norm axioms (identity 1, monotonicity,
/// commutativity, associativity) and their t-conorm duals (identity 0).
struct NormPair {
  NormId id;
  std::string_view name;
  double (*tnorm_raw)(double, double);
  double (*tconorm_raw)(double, double);

  [[nodiscard]] UnitValue tnorm(UnitValue a, UnitValue b) const noexcept {
    return UnitValue::clamped(tnorm_raw(a.get(), b.get()));
  }
  [[nodiscard]] UnitValue tconorm(UnitValue a, UnitValue b) const noexcept {
    return UnitValue::clamped(tconorm_raw(a.get(), b.get()));
  }
};

/// All six pairs, in NormId order.
const std::array<NormPair, 6>& all_norms() noexcept;

const NormPair& norm(NormId id) noexcept;

/// Case-insensitive lookup by canonical name; throws UnknownNormError for
/// anything outside {drastic, bounded, einstein, algebraic, hamacher, minmax}.
const NormPair& resolve_norm(std::string_view name);

std::string_view to_string(NormId id) noexcept;

}  // namespace nsm
