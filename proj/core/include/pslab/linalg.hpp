#pragma once

#include <utility>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

/// Sparse vector: (column, value) entries, strictly increasing columns, no
/// explicit zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow normalize_row(SparseRow row);  // sorts, merges, drops zeros
SparseRow row_from_dense(const std::vector<Rational>& v);
std::vector<Rational> row_to_dense(const SparseRow& row, int cols);

/// Row-major exact rational sparse matrix with a fixed column count.
class SparseMatrix {
 public:
  explicit SparseMatrix(int cols);

  int cols() const { return cols_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  void add_row(SparseRow row);
  const SparseRow& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  const std::vector<SparseRow>& row_data() const { return rows_; }

  /// m . v over the column space; v indexed by columns.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  int cols_;
  std::vector<SparseRow> rows_;
};

/// A subspace of Q^ambient held as a reduced-row-echelon basis: pivot columns
/// strictly increase, pivot entries are 1, and pivot columns are zero in every
/// other row. RREF is canonical, so two Subspaces are equal iff their rows are.
class Subspace {
 public:
  static Subspace zero(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating all pivot coordinates.
  SparseRow reduce(SparseRow v) const;
  bool contains(const SparseRow& v) const;

 private:
  friend Subspace rref_rows(std::vector<SparseRow> in, int ambient);
  Subspace(int ambient, std::vector<SparseRow> rows, std::vector<int> pivots)
      : ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  int ambient_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<int> pivots_;
};

/// Canonical RREF of the row space.
Subspace rref(const SparseMatrix& m);
Subspace rref_rows(std::vector<SparseRow> rows, int ambient);

/// Null space {v : m.v = 0} as a subspace of the column space Q^cols.
Subspace kernel(const SparseMatrix& m);

/// Null space of the linear map e_j -> columns[j] into Q^image_dim; the
/// orientation used to compute kernels of evaluation maps, where each domain
/// basis vector's image arrives as one sparse column.
Subspace kernel_of_columns(const std::vector<SparseRow>& columns, int image_dim);

bool is_subspace(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Re-index the coordinates of every basis row via old column -> column_map[old]
/// inside a new ambient space. column_map must be injective on the support.
Subspace remap_columns(const Subspace& s, const std::vector<int>& column_map, int new_ambient);

}  // namespace pslab
