#pragma once

#include <cstddef>
#include <utility>

#include "nsm/matrix.hpp"
#include "nsm/norms.hpp"

namespace nsm {

enum class ProductKind { And, Or };

/// Column of the m x n^2 product matrix holding the combination of
/// column j of A with column k of B (all indices 0-based):
/// p = n*j + k, the 0-based form of p = n(j-1)+k.
[[nodiscard]] constexpr std::size_t product_column(std::size_t j, std::size_t k,
                                                   std::size_t n) noexcept {
  return n * j + k;
}

/// Inverse of product_column: p -> (j, k).
[[nodiscard]] constexpr std::pair<std::size_t, std::size_t>
product_column_split(std::size_t p, std::size_t n) noexcept {
  return {p / n, p % n};
}

/// And-product: m x n^2 matrix with cell (i, p) =
/// (t(T^a_ij, T^b_ik), s(I^a_ij, I^b_ik), s(F^a_ij, F^b_ik)).
/// Output columns are labeled "xj∧xk". Requires equal shapes and labels.
NsMatrix and_product(const NsMatrix& a, const NsMatrix& b,
                     const NormPair& pair);

/// Or-product: same block layout with (s(T,T), t(I,I), t(F,F)),
/// columns labeled "xj∨xk".
NsMatrix or_product(const NsMatrix& a, const NsMatrix& b,
                    const NormPair& pair);

NsMatrix product(const NsMatrix& a, const NsMatrix& b, ProductKind kind,
                 const NormPair& pair);

}  // namespace nsm
