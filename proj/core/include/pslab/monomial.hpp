#pragma once

#include <map>
#include <string>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

/// A commutative monomial x(-d1)*x(-d2)*...*x(-dr) in the mode variables
/// x(-1), x(-2), ..., stored as its descending part sequence d1 >= ... >= dr
/// (a partition). The empty sequence is the unit. weight = sum of parts,
/// charge = number of parts.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> parts);

  static Monomial single(int part) { return power(part, 1); }
  static Monomial power(int part, int exponent);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int charge() const { return static_cast<int>(parts_.size()); }
  bool is_unit() const { return parts_.empty(); }
  int min_part() const;  // 0 for the unit
  bool has_part_one() const { return !parts_.empty() && parts_.back() == 1; }

  /// Multiset union of parts.
  Monomial times(const Monomial& other) const;

  /// Shift every part by +s (tau^s). Throws std::domain_error if a part
  /// would drop below 1.
  Monomial shifted(int s) const;

  /// The monomial with the largest part removed. Precondition: not the unit.
  Monomial dropping_largest() const;

  /// Global monomial order: by weight, then charge, then lexicographically
  /// decreasing part sequence (graded revlex). Fixed once so that graded
  /// pieces have reproducible column indexing everywhere.
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return parts_ == other.parts_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Text form "x(-3)^2*x(-1)"; the unit prints as "1".
  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// A finite rational linear combination of monomials; the elements of the
/// polynomial algebras spanned by the negative modes. Zero coefficients are
/// never stored.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  GradedPolynomial(Monomial m, Rational coeff);
  explicit GradedPolynomial(const Monomial& m) : GradedPolynomial(m, 1) {}

  static GradedPolynomial unit() { return GradedPolynomial(Monomial{}); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  GradedPolynomial& operator*=(const Rational& c);
  GradedPolynomial& operator*=(const GradedPolynomial& other);

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
    a += b;
    return a;
  }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
    a -= b;
    return a;
  }
  friend GradedPolynomial operator*(GradedPolynomial a, const GradedPolynomial& b) {
    a *= b;
    return a;
  }
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) {
    a *= c;
    return a;
  }
  friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) {
    a *= c;
    return a;
  }

  bool operator==(const GradedPolynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const GradedPolynomial& other) const { return !(*this == other); }

  /// True iff all monomials share one (weight, charge); reports it when so.
  /// The zero polynomial is homogeneous of every bigrade (outputs untouched).
  bool doubly_homogeneous(int* weight = nullptr, int* charge = nullptr) const;

  /// Signed sum in monomial order, e.g. "x(-2)^2 - 2*x(-3)*x(-1)".
  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace pslab
