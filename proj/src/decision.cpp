#include "nsm/decision.hpp"

#include <cmath>
#include <string>

namespace nsm {
namespace {

std::size_t block_count_of(std::size_t cols) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(
      static_cast<double>(cols))));
  if (n == 0 || n * n != cols) {
    throw ShapeMismatchError("column count " + std::to_string(cols) +
                             " is not a perfect square");
  }
  return n;
}

}  // namespace

ActiveBlocks active_blocks(const NsMatrix& product_matrix) {
  const std::size_t n = block_count_of(product_matrix.col_count());
  ActiveBlocks blocks;
  blocks.block_count = n;
  blocks.columns.resize(n);
  for (std::size_t p = 0; p < product_matrix.col_count(); ++p) {
    bool active = false;
    for (std::size_t i = 0; i < product_matrix.row_count() && !active; ++i) {
      active = product_matrix.at(i, p) != NsValue::zero();
    }
    if (active) blocks.columns[p / n].push_back(p);
  }
  return blocks;
}

std::vector<NsValue> dmmm(const NsMatrix& product_matrix) {
  const ActiveBlocks blocks = active_blocks(product_matrix);
  std::vector<NsValue> column;
  column.reserve(product_matrix.row_count());

  for (std::size_t i = 0; i < product_matrix.row_count(); ++i) {
    NsValue d{};
    bool first_block = true;
    for (const std::vector<std::size_t>& block : blocks.columns) {
      NsValue t = NsValue::zero();
      bool first_col = true;
      for (std::size_t p : block) {
        const NsValue& cell = product_matrix.at(i, p);
        if (first_col) {
          t = cell;
          first_col = false;
        } else {
          t.truth = min(t.truth, cell.truth);
          t.indeterminacy = max(t.indeterminacy, cell.indeterminacy);
          t.falsity = max(t.falsity, cell.falsity);
        }
      }
      if (first_block) {
        d = t;
        first_block = false;
      } else {
        d.truth = max(d.truth, t.truth);
        d.indeterminacy = max(d.indeterminacy, t.indeterminacy);
        d.falsity = min(d.falsity, t.falsity);
      }
    }
    column.push_back(d);
  }
  return column;
}

double score(const NsValue& d) noexcept {
  return d.truth.get() - d.indeterminacy.get() * d.falsity.get();
}

DecisionOutcome optimum(const Universe& universe,
                        const std::vector<NsValue>& triples) {
  if (triples.size() != universe.size()) {
    throw ShapeMismatchError("decision column has " +
                             std::to_string(triples.size()) +
                             " entries for a universe of " +
                             std::to_string(universe.size()) + " objects");
  }
  DecisionOutcome outcome;
  outcome.per_object.reserve(universe.size());
  double best = score(triples.front());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const double s = score(triples[i]);
    outcome.per_object.push_back({universe.label(i), triples[i], s});
    if (s > best) best = s;
  }
  for (const ObjectScore& entry : outcome.per_object) {
    if (entry.s == best) outcome.optimum.push_back(entry);
  }
  return outcome;
}

DecisionOutcome nsm_decide(const NsMatrix& a, const NsMatrix& b,
                           ProductKind kind, const NormPair& pair) {
  const NsMatrix combined = product(a, b, kind, pair);
  return optimum(a.row_labels(), dmmm(combined));
}

}  // namespace nsm
