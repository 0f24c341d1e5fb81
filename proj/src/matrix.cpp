#include "nsm/matrix.hpp"

#include <string>
#include <utility>

namespace nsm {
namespace {

void require_same_frame(const NsMatrix& a, const NsMatrix& b) {
  if (a.row_count() != b.row_count() || a.col_count() != b.col_count()) {
    throw ShapeMismatchError(
        "matrix shapes differ: " + std::to_string(a.row_count()) + "x" +
        std::to_string(a.col_count()) + " vs " + std::to_string(b.row_count()) +
        "x" + std::to_string(b.col_count()));
  }
  if (a.row_labels() != b.row_labels()) {
    throw ShapeMismatchError("row (universe) labels differ");
  }
  if (a.col_labels() != b.col_labels()) {
    throw ShapeMismatchError("column (parameter) labels differ");
  }
}

template <typename CellFn>
NsMatrix combine(const NsMatrix& a, const NsMatrix& b, CellFn&& cell) {
  require_same_frame(a, b);
  std::vector<NsValue> cells;
  cells.reserve(a.row_count() * a.col_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      cells.push_back(cell(a.at(i, j), b.at(i, j)));
    }
  }
  return {a.row_labels(), a.col_labels(), std::move(cells)};
}

}  // namespace

NsMatrix::NsMatrix(Universe row_labels, ParameterSet col_labels,
                   std::vector<NsValue> cells)
    : rows_(std::move(row_labels)),
      cols_(std::move(col_labels)),
      cells_(std::move(cells)) {
  const std::size_t expected = rows_.size() * cols_.size();
  if (cells_.size() != expected) {
    throw ValidationError("matrix has " + std::to_string(cells_.size()) +
                          " cells, expected " + std::to_string(expected));
  }
}

NsMatrix NsMatrix::filled(Universe row_labels, ParameterSet col_labels,
                          NsValue fill) {
  std::vector<NsValue> cells(row_labels.size() * col_labels.size(), fill);
  return {std::move(row_labels), std::move(col_labels), std::move(cells)};
}

NsMatrix NsMatrix::zero_matrix(Universe row_labels, ParameterSet col_labels) {
  return filled(std::move(row_labels), std::move(col_labels), NsValue::zero());
}

NsMatrix NsMatrix::universal_matrix(Universe row_labels,
                                    ParameterSet col_labels) {
  return filled(std::move(row_labels), std::move(col_labels),
                NsValue::universal());
}

NsMatrix from_soft_set(const NsSoftSet& set) {
  std::vector<NsValue> cells;
  cells.reserve(set.object_count() * set.parameter_count());
  for (std::size_t u = 0; u < set.object_count(); ++u) {
    for (std::size_t p = 0; p < set.parameter_count(); ++p) {
      cells.push_back(set.value(p, u));
    }
  }
  return {set.universe(), set.parameters(), std::move(cells)};
}

NsSoftSet to_soft_set(const NsMatrix& matrix) {
  std::vector<NsValue> values;
  values.reserve(matrix.row_count() * matrix.col_count());
  for (std::size_t j = 0; j < matrix.col_count(); ++j) {
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
      values.push_back(matrix.at(i, j));
    }
  }
  return {matrix.row_labels(), matrix.col_labels(), std::move(values)};
}

NsMatrix transpose(const NsMatrix& matrix) {
  std::vector<NsValue> cells;
  cells.reserve(matrix.row_count() * matrix.col_count());
  for (std::size_t j = 0; j < matrix.col_count(); ++j) {
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
      cells.push_back(matrix.at(i, j));
    }
  }
  return {Universe(matrix.col_labels().labels()),
          ParameterSet(matrix.row_labels().labels()), std::move(cells)};
}

ShapeReport classify(const NsMatrix& matrix) {
  ShapeReport report;
  report.is_row = matrix.row_count() == 1;
  report.is_column = matrix.col_count() == 1;
  report.is_square = matrix.row_count() == matrix.col_count();

  report.is_zero = true;
  report.is_universal = true;
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    for (std::size_t j = 0; j < matrix.col_count(); ++j) {
      if (matrix.at(i, j) != NsValue::zero()) report.is_zero = false;
      if (matrix.at(i, j) != NsValue::universal()) report.is_universal = false;
    }
  }

  if (report.is_square) {
    report.is_diagonal = true;
    report.is_symmetric = true;
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
      for (std::size_t j = 0; j < matrix.col_count(); ++j) {
        if (i != j && matrix.at(i, j) != NsValue::zero()) {
          report.is_diagonal = false;
        }
        if (matrix.at(i, j) != matrix.at(j, i)) {
          report.is_symmetric = false;
        }
      }
    }
  }
  return report;
}

NsMatrix mat_union(const NsMatrix& a, const NsMatrix& b) {
  return combine(a, b, [](const NsValue& x, const NsValue& y) {
    return NsValue{max(x.truth, y.truth), min(x.indeterminacy, y.indeterminacy),
                   min(x.falsity, y.falsity)};
  });
}

NsMatrix mat_intersection(const NsMatrix& a, const NsMatrix& b) {
  return combine(a, b, [](const NsValue& x, const NsValue& y) {
    return NsValue{min(x.truth, y.truth), max(x.indeterminacy, y.indeterminacy),
                   max(x.falsity, y.falsity)};
  });
}

NsMatrix mat_complement(const NsMatrix& a) {
  std::vector<NsValue> cells;
  cells.reserve(a.row_count() * a.col_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      cells.push_back(complement(a.at(i, j), ComplementMode::one_minus_i));
    }
  }
  return {a.row_labels(), a.col_labels(), std::move(cells)};
}

bool mat_subset(const NsMatrix& a, const NsMatrix& b) {
  require_same_frame(a, b);
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      const NsValue& x = a.at(i, j);
      const NsValue& y = b.at(i, j);
      if (x.truth > y.truth || x.indeterminacy < y.indeterminacy ||
          x.falsity < y.falsity) {
        return false;
      }
    }
  }
  return true;
}

bool mat_proper_subset(const NsMatrix& a, const NsMatrix& b) {
  if (!mat_subset(a, b)) return false;
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return true;
    }
  }
  return false;
}

bool mat_equal(const NsMatrix& a, const NsMatrix& b) {
  require_same_frame(a, b);
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    for (std::size_t j = 0; j < a.col_count(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

bool mat_disjoint(const NsMatrix& a, const NsMatrix& b) {
  const NsMatrix meet = mat_intersection(a, b);
  for (std::size_t i = 0; i < meet.row_count(); ++i) {
    for (std::size_t j = 0; j < meet.col_count(); ++j) {
      if (meet.at(i, j) != NsValue::zero()) return false;
    }
  }
  return true;
}

}  // namespace nsm
