#pragma once

#include <vector>

#include "nsm/labels.hpp"
#include "nsm/norms.hpp"
#include "nsm/ns_value.hpp"

namespace nsm {

/// A neutrosophic soft set: a total valuation (parameter, object) -> NsValue
/// over the full parameter set. Values are stored parameter-major, objects
/// innermost, which fixes the serialization order.
class NsSoftSet {
 public:
  /// `values` is parameter-major: values[p * |U| + u].
  NsSoftSet(Universe universe, ParameterSet parameters,
            std::vector<NsValue> values);

  /// Every cell set to `fill`.
  static NsSoftSet uniform(Universe universe, ParameterSet parameters,
                           NsValue fill);

  [[nodiscard]] const Universe& universe() const noexcept { return universe_; }
  [[nodiscard]] const ParameterSet& parameters() const noexcept { return parameters_; }
  [[nodiscard]] std::size_t object_count() const noexcept { return universe_.size(); }
  [[nodiscard]] std::size_t parameter_count() const noexcept { return parameters_.size(); }

  [[nodiscard]] const NsValue& value(std::size_t parameter, std::size_t object) const {
    return values_[parameter * object_count() + object];
  }

  bool operator==(const NsSoftSet&) const = default;

 private:
  Universe universe_;
  ParameterSet parameters_;
  std::vector<NsValue> values_;
};

/// Cellwise (T, I, F) -> (F, I, T), with I flipped to 1-I in one_minus_i mode.
NsSoftSet set_complement(const NsSoftSet& n, ComplementMode mode);

/// Cellwise T = s(T1, T2), I = t(I1, I2), F = t(F1, F2).
NsSoftSet set_union(const NsSoftSet& n1, const NsSoftSet& n2,
                    const NormPair& pair);

/// Cellwise T = t(T1, T2), I = s(I1, I2), F = s(F1, F2).
NsSoftSet set_intersection(const NsSoftSet& n1, const NsSoftSet& n2,
                           const NormPair& pair);

/// True iff every cell satisfies T1 <= T2, I1 >= I2, F1 >= F2.
bool set_subset(const NsSoftSet& n1, const NsSoftSet& n2);

}  // namespace nsm
