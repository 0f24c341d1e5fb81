#include "nsm/products.hpp"

#include <string>
#include <vector>

namespace nsm {
namespace {

void require_same_frame(const NsMatrix& a, const NsMatrix& b) {
  if (a.row_count() != b.row_count() || a.col_count() != b.col_count()) {
    throw ShapeMismatchError(
        "product operands differ in shape: " + std::to_string(a.row_count()) +
        "x" + std::to_string(a.col_count()) + " vs " +
        std::to_string(b.row_count()) + "x" + std::to_string(b.col_count()));
  }
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels()) {
    throw ShapeMismatchError("product operands carry different labels");
  }
}

NsMatrix block_product(const NsMatrix& a, const NsMatrix& b,
                       const NormPair& pair, ProductKind kind) {
  require_same_frame(a, b);
  const std::size_t m = a.row_count();
  const std::size_t n = a.col_count();
  const char* joiner = kind == ProductKind::And ? "∧" : "∨";

  std::vector<std::string> col_labels;
  col_labels.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      col_labels.push_back(a.col_labels().label(j) + joiner +
                           b.col_labels().label(k));
    }
  }

  std::vector<NsValue> cells(m * n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const NsValue& x = a.at(i, j);
        const NsValue& y = b.at(i, k);
        NsValue c =
            kind == ProductKind::And
                ? NsValue{pair.tnorm(x.truth, y.truth),
                          pair.tconorm(x.indeterminacy, y.indeterminacy),
                          pair.tconorm(x.falsity, y.falsity)}
                : NsValue{pair.tconorm(x.truth, y.truth),
                          pair.tnorm(x.indeterminacy, y.indeterminacy),
                          pair.tnorm(x.falsity, y.falsity)};
        cells[i * n * n + product_column(j, k, n)] = c;
      }
    }
  }
  return {a.row_labels(), ParameterSet(std::move(col_labels)),
          std::move(cells)};
}

}  // namespace

NsMatrix and_product(const NsMatrix& a, const NsMatrix& b,
                     const NormPair& pair) {
  return block_product(a, b, pair, ProductKind::And);
}

NsMatrix or_product(const NsMatrix& a, const NsMatrix& b,
                    const NormPair& pair) {
  return block_product(a, b, pair, ProductKind::Or);
}

NsMatrix product(const NsMatrix& a, const NsMatrix& b, ProductKind kind,
                 const NormPair& pair) {
  return block_product(a, b, pair, kind);
}

}  // namespace nsm
