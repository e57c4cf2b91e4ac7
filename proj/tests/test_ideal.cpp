#include <doctest.h>

#include "pslab/ideal.hpp"

using namespace pslab;

TEST_CASE("ideal piece worked examples") {
  // Level 1, index 0, bigrade (2,2): spanned by the weight-2 relation x(-1)^2.
  Subspace s = ideal_piece(1, 0, 2, 2);
  CHECK(s.dim() == 1);
  const MonomialBasis basis = MonomialBasis::bigrade(2, 2, 1);
  CHECK(row_polynomial(s, 0, basis) == GradedPolynomial(Monomial({1, 1})));

  // Level 1, index 1: x(-1) itself is a generator.
  CHECK(ideal_piece(1, 1, 1, 1).dim() == 1);

  // Charge-1 piece at weight 2 for index 0 is empty.
  CHECK(ideal_piece(1, 0, 2, 1).dim() == 0);
}

TEST_CASE("kernel piece worked examples") {
  ModuleConfig cfg10(1, 0);
  Subspace k22 = kernel_piece(cfg10, 2, 2);
  CHECK(k22.dim() == 1);
  const MonomialBasis basis = MonomialBasis::bigrade(2, 2, 1);
  CHECK(row_polynomial(k22, 0, basis) == GradedPolynomial(Monomial({1, 1})));

  CHECK(kernel_piece(cfg10, 1, 1).dim() == 0);
  CHECK(kernel_piece(ModuleConfig(2, 0), 2, 2).dim() == 0);
}

TEST_CASE("presentation holds at small cutoffs") {
  for (int index = 0; index <= 1; ++index) {
    auto rows = verify_presentation(1, index, 8);
    CHECK(all_pass(rows));
    for (const auto& r : rows) {
      CHECK(r.ideal_in_kernel);  // unconditional inclusion
      CHECK(r.dim_ideal <= r.dim_kernel);
      CHECK(r.dim_kernel <= r.dim_monomials);
    }
  }
  for (int index = 0; index <= 2; ++index) {
    CHECK(all_pass(verify_presentation(2, index, 6)));
  }
  CHECK(all_pass(verify_presentation(3, 1, 5)));
}

TEST_CASE("presentation rows include the trivial bigrade") {
  auto rows = verify_presentation(1, 0, 2);
  REQUIRE(!rows.empty());
  CHECK(rows[0].weight == 0);
  CHECK(rows[0].charge == 0);
  CHECK(rows[0].dim_monomials == 1);
  CHECK(rows[0].dim_ideal == 0);
  CHECK(rows[0].dim_kernel == 0);
  CHECK(rows[0].equal);
}

TEST_CASE("primed presentation at small cutoffs") {
  for (int level = 1; level <= 2; ++level) {
    auto rows = verify_presentation_primed(level, 8);
    CHECK(all_pass(rows));
  }
}

TEST_CASE("kernel pieces are pattern independent") {
  for (int weight = 0; weight <= 6; ++weight) {
    for (int charge = 0; charge <= weight; ++charge) {
      Subspace a = kernel_piece(ModuleConfig(2, 1, {1, 0}), weight, charge);
      Subspace b = kernel_piece(ModuleConfig(2, 1, {0, 1}), weight, charge);
      CHECK(equal(a, b));
      Subspace c = kernel_piece(ModuleConfig(3, 2, {1, 1, 0}), weight, charge);
      Subspace d = kernel_piece(ModuleConfig(3, 2, {0, 1, 1}), weight, charge);
      CHECK(equal(c, d));
      Subspace e = kernel_piece(ModuleConfig(3, 1, {1, 0, 0}), weight, charge);
      Subspace f = kernel_piece(ModuleConfig(3, 1, {0, 1, 0}), weight, charge);
      Subspace g = kernel_piece(ModuleConfig(3, 1, {0, 0, 1}), weight, charge);
      CHECK(equal(e, f));
      CHECK(equal(f, g));
    }
  }
}

TEST_CASE("ideal inclusion chain and decompositions") {
  CHECK(all_pass(verify_remark_22(1, 8)));
  CHECK(all_pass(verify_remark_22(2, 7)));
}

TEST_CASE("rho image of the top ideal piece matches the example") {
  // At level 1, bigrade (4,2): the projection of the index-1 ideal piece is
  // spanned by x(-2)^2.
  const MonomialBasis basis = MonomialBasis::bigrade(4, 2, 1);
  const MonomialBasis basis2 = MonomialBasis::bigrade(4, 2, 2);
  Subspace piece = ideal_piece(1, 1, 4, 2);
  std::vector<SparseRow> projected;
  for (int r = 0; r < piece.dim(); ++r) {
    GradedPolynomial p = rho(row_polynomial(piece, r, basis));
    SparseRow row;
    for (const auto& [m, c] : p.terms()) row.emplace_back(basis2.find(m), c);
    projected.push_back(normalize_row(std::move(row)));
  }
  Subspace image = rref_rows(std::move(projected), basis2.size());
  CHECK(image.dim() == 1);
  CHECK(row_polynomial(image, 0, basis2) == GradedPolynomial(Monomial({2, 2})));
}

TEST_CASE("lifting lemma rows") {
  CHECK(all_pass(verify_lifting_lemma(1, 0, 7)));
  CHECK(all_pass(verify_lifting_lemma(1, 1, 7)));
  for (int index = 0; index <= 2; ++index) CHECK(all_pass(verify_lifting_lemma(2, index, 6)));
}

TEST_CASE("lifting multinomial fact") {
  // Coefficient of x(-2)^{k-i+1} x(-1)^i in the weight 2k-i+2 relation.
  for (int level = 1; level <= 4; ++level) {
    for (int index = 0; index <= level; ++index) {
      const GradedPolynomial r = relation_generator(level, 2 * level - index + 2, 0);
      std::vector<int> parts(static_cast<size_t>(level - index + 1), 2);
      parts.insert(parts.end(), static_cast<size_t>(index), 1);
      const Rational expected(factorial(static_cast<unsigned long>(level + 1)) /
                              (factorial(static_cast<unsigned long>(level - index + 1)) *
                               factorial(static_cast<unsigned long>(index))));
      CHECK(r.coeff(Monomial(parts)) == expected);
    }
  }
  // The example in words: x(-2)^2 appears in the level-1 weight-4 relation
  // with coefficient 1 = 2!/2!0!.
  CHECK(relation_generator(1, 4, 0).coeff(Monomial({2, 2})) == 1);
}

TEST_CASE("tau lemma rows") {
  CHECK(all_pass(verify_tau_lemma(1, 8)));
  CHECK(all_pass(verify_tau_lemma(2, 7)));
}

TEST_CASE("tau lemma witness example") {
  // tau(R_{1,2}) = x(-2)^2 lies in the index-1 ideal piece at (4,2).
  const GradedPolynomial shifted = tau_power(relation_generator(1, 2, 0), 1);
  const MonomialBasis basis = MonomialBasis::bigrade(4, 2, 1);
  SparseRow row;
  for (const auto& [m, c] : shifted.terms()) row.emplace_back(basis.find(m), c);
  CHECK(ideal_piece(1, 1, 4, 2).contains(normalize_row(std::move(row))));
}

TEST_CASE("kernel chain rows") {
  CHECK(all_pass(verify_kernel_chain(1, 8)));
  CHECK(all_pass(verify_kernel_chain(2, 6)));
}

TEST_CASE("annihilation rows") {
  CHECK(all_pass(verify_annihilation(1, 8)));
  CHECK(all_pass(verify_annihilation(2, 6)));
  CHECK(all_pass(verify_annihilation(3, 5)));
}

TEST_CASE("charge bound rows") {
  CHECK(all_pass(verify_charge_bound(1, 8)));
  CHECK(all_pass(verify_charge_bound(2, 7)));
}

TEST_CASE("charge k+1 kernel pieces are spanned by the relation when nonzero") {
  // Nonzero pieces of charge level+1 must be multiples of the truncated
  // relation of that weight.
  for (int level = 1; level <= 2; ++level) {
    const ModuleConfig cfg(level, 0);
    Evaluator ev(cfg);
    for (int t = level + 1; t <= 8; ++t) {
      Subspace k = kernel_piece(cfg, t, level + 1, &ev);
      REQUIRE(k.dim() == 1);
      const MonomialBasis basis = MonomialBasis::bigrade(t, level + 1, 1);
      GradedPolynomial r = relation_generator(level, t, 0);
      SparseRow row;
      for (const auto& [m, c] : r.terms()) row.emplace_back(basis.find(m), c);
      CHECK(k.contains(normalize_row(std::move(row))));
    }
  }
}
