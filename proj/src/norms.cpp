#include "nsm/norms.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace nsm {
namespace {

double drastic_t(double a, double b) {
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  return 0.0;
}

double drastic_s(double a, double b) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return 1.0;
}

double bounded_t(double a, double b) { return std::max(0.0, a + b - 1.0); }

double bounded_s(double a, double b) { return std::min(1.0, a + b); }

double einstein_t(double a, double b) {
  // denominator is >= 1 on [0,1]^2
  return a * b / (2.0 - (a + b - a * b));
}

double einstein_s(double a, double b) { return (a + b) / (1.0 + a * b); }

double algebraic_t(double a, double b) { return a * b; }

double algebraic_s(double a, double b) { return a + b - a * b; }

double hamacher_t(double a, double b) {
  // the printed formula is 0/0 at a = b = 0; the continuity limit is 0,
  // which the axiom t(0,0) = 0 requires anyway
  if (a == 0.0 && b == 0.0) return 0.0;
  return a * b / (a + b - a * b);
}

double hamacher_s(double a, double b) {
  // dual 0/0 corner: s(1,1) = 1
  if (a == 1.0 && b == 1.0) return 1.0;
  return (a + b - 2.0 * a * b) / (1.0 - a * b);
}

double minmax_t(double a, double b) { return std::min(a, b); }

double minmax_s(double a, double b) { return std::max(a, b); }

constexpr std::array<std::string_view, 6> kNames{
    "drastic", "bounded", "einstein", "algebraic", "hamacher", "minmax"};

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const std::array<NormPair, 6>& all_norms() noexcept {
  static const std::array<NormPair, 6> table{{
      {NormId::drastic, "drastic", drastic_t, drastic_s},
      {NormId::bounded, "bounded", bounded_t, bounded_s},
      {NormId::einstein, "einstein", einstein_t, einstein_s},
      {NormId::algebraic, "algebraic", algebraic_t, algebraic_s},
      {NormId::hamacher, "hamacher", hamacher_t, hamacher_s},
      {NormId::minmax, "minmax", minmax_t, minmax_s},
  }};
  return table;
}

const NormPair& norm(NormId id) noexcept {
  return all_norms()[static_cast<std::size_t>(id)];
}

const NormPair& resolve_norm(std::string_view name) {
  const std::string folded = lowercased(name);
  for (const NormPair& pair : all_norms()) {
    if (pair.name == folded) return pair;
  }
  std::string msg = "unknown norm '" + std::string(name) + "'; valid norms:";
  for (std::string_view n : kNames) {
    msg += ' ';
    msg += n;
  }
  throw UnknownNormError(msg);
}

std::string_view to_string(NormId id) noexcept {
  return kNames[static_cast<std::size_t>(id)];
}

}  // namespace nsm
