#include "nsm/soft_set.hpp"

#include <string>

namespace nsm {
namespace {

void require_same_frame(const NsSoftSet& a, const NsSoftSet& b) {
  if (a.universe() != b.universe()) {
    throw ShapeMismatchError("universes differ (" +
                             std::to_string(a.object_count()) + " vs " +
                             std::to_string(b.object_count()) + " objects, or "
                             "different labels/order)");
  }
  if (a.parameters() != b.parameters()) {
    throw ShapeMismatchError("parameter sets differ (" +
                             std::to_string(a.parameter_count()) + " vs " +
                             std::to_string(b.parameter_count()) +
                             " parameters, or different labels/order)");
  }
}

template <typename CellFn>
NsSoftSet combine(const NsSoftSet& a, const NsSoftSet& b, CellFn&& cell) {
  require_same_frame(a, b);
  std::vector<NsValue> values;
  values.reserve(a.parameter_count() * a.object_count());
  for (std::size_t p = 0; p < a.parameter_count(); ++p) {
    for (std::size_t u = 0; u < a.object_count(); ++u) {
      values.push_back(cell(a.value(p, u), b.value(p, u)));
    }
  }
  return {a.universe(), a.parameters(), std::move(values)};
}

}  // namespace

NsSoftSet::NsSoftSet(Universe universe, ParameterSet parameters,
                     std::vector<NsValue> values)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      values_(std::move(values)) {
  const std::size_t expected = universe_.size() * parameters_.size();
  if (values_.size() != expected) {
    throw ValidationError("valuation has " + std::to_string(values_.size()) +
                          " cells, expected " + std::to_string(expected));
  }
}

NsSoftSet NsSoftSet::uniform(Universe universe, ParameterSet parameters,
                             NsValue fill) {
  std::vector<NsValue> values(universe.size() * parameters.size(), fill);
  return {std::move(universe), std::move(parameters), std::move(values)};
}

NsSoftSet set_complement(const NsSoftSet& n, ComplementMode mode) {
  std::vector<NsValue> values;
  values.reserve(n.parameter_count() * n.object_count());
  for (std::size_t p = 0; p < n.parameter_count(); ++p) {
    for (std::size_t u = 0; u < n.object_count(); ++u) {
      values.push_back(complement(n.value(p, u), mode));
    }
  }
  return {n.universe(), n.parameters(), std::move(values)};
}

NsSoftSet set_union(const NsSoftSet& n1, const NsSoftSet& n2,
                    const NormPair& pair) {
  return combine(n1, n2, [&pair](const NsValue& a, const NsValue& b) {
    return NsValue{pair.tconorm(a.truth, b.truth),
                   pair.tnorm(a.indeterminacy, b.indeterminacy),
                   pair.tnorm(a.falsity, b.falsity)};
  });
}

NsSoftSet set_intersection(const NsSoftSet& n1, const NsSoftSet& n2,
                           const NormPair& pair) {
  return combine(n1, n2, [&pair](const NsValue& a, const NsValue& b) {
    return NsValue{pair.tnorm(a.truth, b.truth),
                   pair.tconorm(a.indeterminacy, b.indeterminacy),
                   pair.tconorm(a.falsity, b.falsity)};
  });
}

bool set_subset(const NsSoftSet& n1, const NsSoftSet& n2) {
  require_same_frame(n1, n2);
  for (std::size_t p = 0; p < n1.parameter_count(); ++p) {
    for (std::size_t u = 0; u < n1.object_count(); ++u) {
      const NsValue& a = n1.value(p, u);
      const NsValue& b = n2.value(p, u);
      if (a.truth > b.truth || a.indeterminacy < b.indeterminacy ||
          a.falsity < b.falsity) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace nsm
