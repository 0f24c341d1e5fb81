#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsm/errors.hpp"

namespace nsm {

namespace detail {
/// Rejects empty lists, empty labels and duplicates; `kind` names the list
/// in diagnostics ("universe", "parameter set").
std::vector<std::string> checked_labels(std::vector<std::string> labels,
                                        std::string_view kind);
std::optional<std::size_t> index_of(const std::vector<std::string>& labels,
                                    std::string_view label) noexcept;
}  // namespace detail

/// Ordered, duplicate-free object labels u_1 ... u_m.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels)
      : labels_(detail::checked_labels(std::move(labels), "universe")) {}

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const noexcept {
    return detail::index_of(labels_, label);
  }

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Ordered, duplicate-free parameter labels x_1 ... x_n.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> labels)
      : labels_(detail::checked_labels(std::move(labels), "parameter set")) {}

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const noexcept {
    return detail::index_of(labels_, label);
  }

  bool operator==(const ParameterSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace nsm
