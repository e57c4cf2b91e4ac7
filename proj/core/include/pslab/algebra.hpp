#pragma once

#include <map>
#include <vector>

#include "pslab/monomial.hpp"

namespace pslab {

/// All monomials of the given weight and charge with every part >= min_part,
/// i.e. the partitions of `weight` into exactly `charge` parts each >= min_part,
/// listed in increasing monomial order (lexicographically decreasing part
/// sequences). Empty when infeasible. min_part 1 spans the full negative-mode
/// algebra, min_part 2 its modes-below-minus-one subalgebra.
std::vector<Monomial> enumerate_monomials(int weight, int charge, int min_part);

/// All partitions of `weight` (any number of parts, each >= min_part).
std::vector<std::vector<int>> partitions_of(int weight, int min_part = 1);

/// An ordered monomial basis of one bigraded piece, with index lookup. This is
/// the coordinate system shared by ideal and kernel computations.
struct MonomialBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, int> index;

  static MonomialBasis bigrade(int weight, int charge, int min_part);
  int size() const { return static_cast<int>(monomials.size()); }
  int find(const Monomial& m) const;  // -1 when absent
};

/// The shift automorphism applied s times: every part moves by +s and
/// coefficients are unchanged. For s < 0 every part must stay >= 1
/// (std::domain_error otherwise). Constants are fixed.
GradedPolynomial tau_power(const GradedPolynomial& p, int s);

/// Projection killing every monomial that contains a part equal to 1; the
/// image is spanned by monomials with min part >= 2. Idempotent.
GradedPolynomial rho(const GradedPolynomial& p);

/// The degree-(level+1), weight-t truncated relation: the sum over ordered
/// (level+1)-tuples of modes m_j <= -1 (variant 0) or m_j <= -2 (variant 1)
/// with m_1+...+m_{level+1} = -t, collapsed to commutative form. The
/// coefficient of the monomial with part multiplicities (mu_1, mu_2, ...) is
/// the multinomial (level+1)!/prod(mu_d!). Zero when t < (level+1)*variant_min
/// where variant_min is 1 or 2. Doubly homogeneous of weight t, charge level+1.
GradedPolynomial relation_generator(int level, int t, int variant);

/// x(-1)^exponent.
GradedPolynomial xalpha_power(int exponent);

}  // namespace pslab
