#pragma once

#include <vector>

#include "nsm/soft_set.hpp"

namespace nsm {

/// The matrix form of a neutrosophic soft set: rows are universe objects,
/// columns are parameters, cell (i, j) = (T, I, F) of object i under
/// parameter j. Immutable after construction.
class NsMatrix {
 public:
  /// `cells` is row-major: cells[i * |cols| + j].
  NsMatrix(Universe row_labels, ParameterSet col_labels,
           std::vector<NsValue> cells);

  static NsMatrix filled(Universe row_labels, ParameterSet col_labels,
                         NsValue fill);
  /// All cells (0, 1, 1).
  static NsMatrix zero_matrix(Universe row_labels, ParameterSet col_labels);
  /// All cells (1, 0, 0).
  static NsMatrix universal_matrix(Universe row_labels, ParameterSet col_labels);

  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t col_count() const noexcept { return cols_.size(); }
  [[nodiscard]] const Universe& row_labels() const noexcept { return rows_; }
  [[nodiscard]] const ParameterSet& col_labels() const noexcept { return cols_; }

  [[nodiscard]] const NsValue& at(std::size_t row, std::size_t col) const {
    return cells_[row * col_count() + col];
  }

  bool operator==(const NsMatrix&) const = default;

 private:
  Universe rows_;
  ParameterSet cols_;
  std::vector<NsValue> cells_;
};

/// Shape classification of a matrix.
struct ShapeReport {
  bool is_row = false;        ///< m == 1
  bool is_column = false;     ///< n == 1
  bool is_square = false;     ///< m == n
  bool is_diagonal = false;   ///< square with every off-diagonal cell (0,1,1)
  bool is_symmetric = false;  ///< square with a_ij == a_ji
  bool is_zero = false;       ///< every cell (0,1,1)
  bool is_universal = false;  ///< every cell (1,0,0)
};

NsMatrix from_soft_set(const NsSoftSet& set);
NsSoftSet to_soft_set(const NsMatrix& matrix);

/// n x m matrix with cell (j, i) = input cell (i, j); label lists swapped.
NsMatrix transpose(const NsMatrix& matrix);

ShapeReport classify(const NsMatrix& matrix);

/// Cellwise (max T, min I, min F). Requires equal dimensions and labels.
NsMatrix mat_union(const NsMatrix& a, const NsMatrix& b);

/// Cellwise (min T, max I, max F). Requires equal dimensions and labels.
NsMatrix mat_intersection(const NsMatrix& a, const NsMatrix& b);

/// Cellwise (F, 1-I, T).
NsMatrix mat_complement(const NsMatrix& a);

/// True iff cellwise T^a <= T^b, I^a >= I^b, F^a >= F^b.
bool mat_subset(const NsMatrix& a, const NsMatrix& b);

/// Subset with strict inequality in at least one cell component.
bool mat_proper_subset(const NsMatrix& a, const NsMatrix& b);

/// Cellwise equality under shared labels.
bool mat_equal(const NsMatrix& a, const NsMatrix& b);

/// True iff the cellwise intersection is the zero matrix.
bool mat_disjoint(const NsMatrix& a, const NsMatrix& b);

}  // namespace nsm
