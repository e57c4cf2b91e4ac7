#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pslab/linalg.hpp"

using namespace pslab;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> val(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  SparseMatrix m(cols);
  for (int i = 0; i < rows; ++i) {
    SparseRow r;
    for (int j = 0; j < cols; ++j) {
      if (fill(rng) < 0.4) {
        Rational v = make_rational(val(rng), den(rng));
        if (v != 0) r.emplace_back(j, v);
      }
    }
    m.add_row(std::move(r));
  }
  return m;
}

}  // namespace

TEST_CASE("rref of identity and dependent rows") {
  SparseMatrix id(3);
  for (int i = 0; i < 3; ++i) id.add_row({{i, Rational(1)}});
  Subspace s = rref(id);
  CHECK(s.dim() == 3);
  CHECK(s.pivots() == std::vector<int>{0, 1, 2});

  SparseMatrix dep(2);
  dep.add_row({{0, Rational(1)}, {1, Rational(2)}});
  dep.add_row({{0, Rational(2)}, {1, Rational(4)}});
  Subspace t = rref(dep);
  CHECK(t.dim() == 1);
  REQUIRE(t.rows().size() == 1);
  CHECK(t.rows()[0] == SparseRow{{0, Rational(1)}, {1, Rational(2)}});

  SparseMatrix zero(4);
  zero.add_row({});
  zero.add_row({});
  CHECK(rref(zero).dim() == 0);
}

TEST_CASE("rref is a projection") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    SparseMatrix m = random_matrix(rng, 6, 5);
    Subspace s = rref(m);
    Subspace again = rref_rows(s.rows(), s.ambient());
    CHECK(equal(s, again));
  }
}

TEST_CASE("kernel worked examples") {
  SparseMatrix id(2);
  id.add_row({{0, Rational(1)}});
  id.add_row({{1, Rational(1)}});
  CHECK(kernel(id).dim() == 0);

  SparseMatrix m(2);
  m.add_row({{0, Rational(1)}, {1, Rational(-1)}});
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.rows()[0] == SparseRow{{0, Rational(1)}, {1, Rational(1)}});

  SparseMatrix z(3);
  z.add_row({});
  z.add_row({});
  CHECK(kernel(z).dim() == 3);
}

TEST_CASE("rank-nullity and exact annihilation on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    SparseMatrix m = random_matrix(rng, rows, cols);
    Subspace k = kernel(m);
    CHECK(k.dim() + rref(m).dim() == cols);
    for (const SparseRow& v : k.rows()) {
      for (const Rational& x : m.apply(row_to_dense(v, cols))) CHECK(x == 0);
    }
  }
}

TEST_CASE("subspace operations worked examples") {
  Subspace span_e0 = rref_rows({{{0, Rational(1)}}}, 2);
  CHECK(span_e0.contains({{0, Rational(2)}}));
  CHECK(!span_e0.contains({{1, Rational(1)}}));

  Subspace diag = rref_rows({{{0, Rational(1)}, {1, Rational(1)}}}, 2);
  Subspace plane = rref_rows({{{0, Rational(1)}}, {{1, Rational(1)}}}, 2);
  CHECK(is_subspace(diag, plane));
  CHECK(!is_subspace(plane, diag));

  Subspace span_e1 = rref_rows({{{1, Rational(1)}}}, 2);
  CHECK(sum(span_e0, span_e1).dim() == 2);
}

TEST_CASE("equality is mutual inclusion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMatrix a = random_matrix(rng, 4, 5);
    SparseMatrix b = random_matrix(rng, 4, 5);
    Subspace sa = rref(a);
    Subspace sb = rref(b);
    CHECK(equal(sa, sb) == (is_subspace(sa, sb) && is_subspace(sb, sa)));
    CHECK(equal(sa, sa));
  }
}

TEST_CASE("ambient dimension mismatches are rejected") {
  Subspace a = Subspace::zero(2);
  Subspace b = Subspace::zero(3);
  CHECK_THROWS_AS(is_subspace(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)sum(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)equal(a, b), std::invalid_argument);
}

TEST_CASE("kernel_of_columns matches kernel of the assembled matrix") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    SparseMatrix m = random_matrix(rng, rows, cols);
    std::vector<SparseRow> columns(static_cast<size_t>(cols));
    for (int i = 0; i < m.rows(); ++i) {
      for (const auto& [c, v] : m.row(i)) columns[static_cast<size_t>(c)].emplace_back(i, v);
    }
    CHECK(equal(kernel(m), kernel_of_columns(columns, rows)));
  }
}
