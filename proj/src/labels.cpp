#include "nsm/labels.hpp"

#include <unordered_set>

namespace nsm::detail {

std::vector<std::string> checked_labels(std::vector<std::string> labels,
                                        std::string_view kind) {
  if (labels.empty()) {
    throw ValidationError(std::string(kind) + " must not be empty");
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& label : labels) {
    if (label.empty()) {
      throw ValidationError(std::string(kind) + " contains an empty label");
    }
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate " + std::string(kind) + " label '" +
                            label + "'");
    }
  }
  return labels;
}

std::optional<std::size_t> index_of(const std::vector<std::string>& labels,
                                    std::string_view label) noexcept {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

}  // namespace nsm::detail
