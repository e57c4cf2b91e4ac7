#pragma once

#include <string>
#include <vector>

#include "pslab/algebra.hpp"
#include "pslab/fock.hpp"
#include "pslab/linalg.hpp"

namespace pslab {

/// Outcome of comparing the ideal and kernel pieces at one bigrade.
struct GradedPieceReport {
  int level = 0;
  int index = 0;
  int weight = 0;
  int charge = 0;
  int dim_monomials = 0;
  int dim_ideal = 0;
  int dim_kernel = 0;
  bool ideal_in_kernel = false;
  bool kernel_in_ideal = false;
  bool equal = false;
  std::string witness;  // polynomial text of a one-sided basis element when not equal
};

/// One row of a lemma-style check; `index` is -1 when the check is not tied to
/// a single module index.
struct CheckRow {
  std::string check;
  int level = 0;
  int index = -1;
  int weight = 0;
  int charge = 0;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<GradedPieceReport>& rows) {
  for (const auto& r : rows) {
    if (!r.equal) return false;
  }
  return true;
}

inline bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

/// The bigraded piece of the defining ideal: the span, inside the monomial
/// coordinate space of the bigrade, of all cofactor products with the
/// truncated relations (weights t up to the piece weight) and, for the
/// non-primed ideals, with x(-1)^{level-index+1}. primed = true builds the
/// piece of the modes-below-minus-one ideal (cofactors and ambient restricted
/// to min part 2, relations of variant 1, t >= 2(level+1)); it requires
/// index == level.
Subspace ideal_piece(int level, int index, int weight, int charge, bool primed = false);

/// The bigraded piece of the kernel of the evaluation map: the null space of
/// the matrix whose columns are the images of the bigrade's monomials
/// (min part >= min_part) on the highest weight vector of cfg. Passing an
/// Evaluator shares the monomial-image cache across pieces.
Subspace kernel_piece(const ModuleConfig& cfg, int weight, int charge, Evaluator* ev = nullptr,
                      int min_part = 1);

/// Basis row r of s as a polynomial over the given monomial coordinates.
GradedPolynomial row_polynomial(const Subspace& s, int row, const MonomialBasis& basis);

/// Presentation check (kernel piece == ideal piece) over every bigrade with
/// weight <= max_weight and charge <= min(weight, max_charge); max_charge < 0
/// means unbounded. Failures become report rows, never errors.
std::vector<GradedPieceReport> verify_presentation(int level, int index, int max_weight,
                                                   int max_charge = -1, int jobs = 1);

/// Primed presentation check at index == level: the kernel of the evaluation
/// restricted to min-part-2 monomials against the primed ideal piece, plus the
/// decomposition of the full ideal piece as primed piece (+) x(-1)-multiples
/// that ties the two presentations together.
std::vector<GradedPieceReport> verify_presentation_primed(int level, int max_weight,
                                                          int max_charge = -1, int jobs = 1);

/// The ideal inclusion chain over the index, the two-term description of each
/// ideal from the index-0 one, the projection image claim, and the direct-sum
/// decomposition at index == level, checked per bigrade.
std::vector<CheckRow> verify_remark_22(int level, int max_weight, int jobs = 1);

/// Lifting inclusion: for every basis element a of an ideal piece at (n, c),
/// tau(a) x(-1)^index lies in the complementary ideal piece at
/// (n + c + index, c + index). Also the supporting multinomial fact: the
/// coefficient of x(-2)^{level-index+1} x(-1)^index in the weight
/// 2*level-index+2 relation is (level+1)!/((level-index+1)! index!), and that
/// is the relation's only monomial with fewer than index+1 parts equal to 1.
std::vector<CheckRow> verify_lifting_lemma(int level, int index, int max_weight, int jobs = 1);

/// Shift lemma: tau maps every index-0 ideal piece into the index-level ideal.
std::vector<CheckRow> verify_tau_lemma(int level, int max_weight, int jobs = 1);

/// Kernel chain: kernel pieces grow with the index at every bigrade.
std::vector<CheckRow> verify_kernel_chain(int level, int max_weight, int jobs = 1);

/// The truncated relations and x(-1)^{level-index+1} annihilate every highest
/// weight vector: evaluations vanish for all indices and all relation weights
/// t <= max_t.
std::vector<CheckRow> verify_annihilation(int level, int max_t);

/// Consequence of the presentation at index 0: kernel pieces of charge <=
/// level vanish, and charge level+1 pieces have dimension at most 1.
std::vector<CheckRow> verify_charge_bound(int level, int max_weight, int jobs = 1);

}  // namespace pslab
