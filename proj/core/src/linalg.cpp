#include "pslab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pslab {

namespace {

// r -= c * s, sparse merge.
SparseRow axpy(const SparseRow& r, const Rational& c, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -c * s[j].second);
      ++j;
    } else {
      Rational v = r[i].second - c * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* entry_at(const SparseRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

// Incremental RREF worker: rows mutually reduced, kept sorted by pivot.
struct Reducer {
  std::vector<SparseRow> rows;
  std::vector<int> pivots;

  SparseRow reduce(SparseRow v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v.empty() || pivots[r] > v.back().first) break;
      if (const Rational* c = entry_at(v, pivots[r])) v = axpy(v, *c, rows[r]);
    }
    return v;
  }

  void insert(SparseRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const int pivot = v[0].first;
    if (v[0].second != 1) {
      const Rational inv = 1 / v[0].second;
      for (auto& [col, val] : v) val *= inv;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (const Rational* c = entry_at(rows[r], pivot)) rows[r] = axpy(rows[r], *c, v);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), pivot);
    const size_t idx = static_cast<size_t>(pos - pivots.begin());
    pivots.insert(pos, pivot);
    rows.insert(rows.begin() + static_cast<long>(idx), std::move(v));
  }
};

}  // namespace

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [col, val] : row) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += val;
      if (out.back().second == 0) out.pop_back();
    } else if (val != 0) {
      out.emplace_back(col, std::move(val));
    }
  }
  return out;
}

SparseRow row_from_dense(const std::vector<Rational>& v) {
  SparseRow out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[static_cast<size_t>(i)] != 0) out.emplace_back(i, v[static_cast<size_t>(i)]);
  }
  return out;
}

std::vector<Rational> row_to_dense(const SparseRow& row, int cols) {
  std::vector<Rational> out(static_cast<size_t>(cols), Rational(0));
  for (const auto& [col, val] : row) out[static_cast<size_t>(col)] = val;
  return out;
}

SparseMatrix::SparseMatrix(int cols) : cols_(cols) {
  if (cols < 0) throw std::invalid_argument("SparseMatrix: negative column count");
}

void SparseMatrix::add_row(SparseRow row) {
  row = normalize_row(std::move(row));
  if (!row.empty() && (row.front().first < 0 || row.back().first >= cols_)) {
    throw std::out_of_range("SparseMatrix::add_row: column index out of range");
  }
  rows_.push_back(std::move(row));
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
  }
  std::vector<Rational> out(rows_.size(), Rational(0));
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [col, val] : rows_[i]) out[i] += val * v[static_cast<size_t>(col)];
  }
  return out;
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, {}, {}); }

SparseRow Subspace::reduce(SparseRow v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v.empty() || pivots_[r] > v.back().first) break;
    if (const Rational* c = entry_at(v, pivots_[r])) v = axpy(v, *c, rows_[r]);
  }
  return v;
}

bool Subspace::contains(const SparseRow& v) const {
  if (!v.empty() && v.back().first >= ambient_) {
    throw std::invalid_argument("Subspace::contains: vector outside ambient space");
  }
  return reduce(v).empty();
}

Subspace rref_rows(std::vector<SparseRow> rows, int ambient) {
  // Feed sparser rows first; the heuristic that keeps intermediate
  // coefficients small on the matrices produced by graded pieces.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  Reducer red;
  for (auto& r : rows) {
    if (!r.empty() && (r.front().first < 0 || r.back().first >= ambient)) {
      throw std::out_of_range("rref_rows: column index out of range");
    }
    red.insert(std::move(r));
  }
  return Subspace(ambient, std::move(red.rows), std::move(red.pivots));
}

Subspace rref(const SparseMatrix& m) { return rref_rows(m.row_data(), m.cols()); }

Subspace kernel_of_columns(const std::vector<SparseRow>& columns, int image_dim) {
  // Row-reduce [column_j | e_j]; rows whose image block vanishes carry a
  // canonical basis of the kernel in their tag block.
  const int n = static_cast<int>(columns.size());
  std::vector<SparseRow> aug;
  aug.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    SparseRow r = columns[static_cast<size_t>(j)];
    if (!r.empty() && (r.front().first < 0 || r.back().first >= image_dim)) {
      throw std::out_of_range("kernel_of_columns: image index out of range");
    }
    r.emplace_back(image_dim + j, Rational(1));
    aug.push_back(std::move(r));
  }
  Subspace reduced = rref_rows(std::move(aug), image_dim + n);
  std::vector<SparseRow> basis;
  for (const SparseRow& r : reduced.rows()) {
    if (r.front().first < image_dim) continue;
    SparseRow v;
    v.reserve(r.size());
    for (const auto& [col, val] : r) v.emplace_back(col - image_dim, val);
    basis.push_back(std::move(v));
  }
  return rref_rows(std::move(basis), n);
}

Subspace kernel(const SparseMatrix& m) {
  std::vector<SparseRow> columns(static_cast<size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (const auto& [col, val] : m.row(i)) {
      columns[static_cast<size_t>(col)].emplace_back(i, val);
    }
  }
  return kernel_of_columns(columns, m.rows());
}

bool is_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("is_subspace: ambient dimension mismatch");
  }
  for (const SparseRow& r : a.rows()) {
    if (!b.contains(r)) return false;
  }
  return true;
}

bool equal(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("equal: ambient dimension mismatch");
  }
  return a.pivots() == b.pivots() && a.rows() == b.rows();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("sum: ambient dimension mismatch");
  }
  std::vector<SparseRow> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return rref_rows(std::move(rows), a.ambient());
}

Subspace remap_columns(const Subspace& s, const std::vector<int>& column_map, int new_ambient) {
  std::vector<SparseRow> rows;
  rows.reserve(s.rows().size());
  for (const SparseRow& r : s.rows()) {
    SparseRow out;
    out.reserve(r.size());
    for (const auto& [col, val] : r) {
      out.emplace_back(column_map.at(static_cast<size_t>(col)), val);
    }
    rows.push_back(normalize_row(std::move(out)));
  }
  return rref_rows(std::move(rows), new_ambient);
}

}  // namespace pslab
