#pragma once

#include <string>
#include <vector>

#include "nsm/products.hpp"

namespace nsm {

/// Per-block active columns of an m x n^2 product matrix. Block b
/// (0-based) covers columns [b*n, (b+1)*n); a column is active when some
/// row holds an entry other than the zero triple (0, 1, 1).
struct ActiveBlocks {
  std::size_t block_count = 0;                      ///< n
  std::vector<std::vector<std::size_t>> columns;    ///< ascending, per block
};

/// Throws ShapeMismatchError when the column count is not a perfect square.
ActiveBlocks active_blocks(const NsMatrix& product_matrix);

/// The min-max-max decision column: per row i and block b,
/// t_ib = (min T, max I, max F) over the block's active columns
/// ((0,1,1) when the block has none), then
/// d_i = (max_b T, max_b I, min_b F).
std::vector<NsValue> dmmm(const NsMatrix& product_matrix);

/// Scalar score T - I*F, in [-1, 1].
[[nodiscard]] double score(const NsValue& d) noexcept;

struct ObjectScore {
  std::string object;
  NsValue d;
  double s = 0.0;
};

struct DecisionOutcome {
  std::vector<ObjectScore> per_object;  ///< universe order
  std::vector<ObjectScore> optimum;     ///< every argmax of s, universe order
};

/// Scores one decision triple per object and extracts the optimum set
/// (all ties included). Throws ShapeMismatchError on length mismatch.
DecisionOutcome optimum(const Universe& universe,
                        const std::vector<NsValue>& triples);

/// The full pipeline: product of the two decision-makers' matrices,
/// decision column, optimum set.
DecisionOutcome nsm_decide(const NsMatrix& a, const NsMatrix& b,
                           ProductKind kind, const NormPair& pair);

}  // namespace nsm
