#pragma once

#include <map>
#include <string>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

/// Truncated formal power series in q with exact rational coefficients,
/// indices 0..order. Arithmetic truncates consistently at the order.
class QSeries {
 public:
  explicit QSeries(int order);
  static QSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int n) const;
  void set_coeff(int n, const Rational& c);
  QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
  friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
  friend QSeries operator*(QSeries a, const QSeries& b) { a *= b; return a; }

  /// Multiplication by q^power (drops overflowing coefficients).
  QSeries shifted(int power) const;

  bool operator==(const QSeries& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const QSeries& other) const { return !(*this == other); }
  bool is_zero() const;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// (q;q)_n = prod_{j=1..n} (1 - q^j), truncated.
QSeries q_pochhammer(int n, int order);

/// Multiplicative inverse of a series with nonzero constant term.
QSeries inverse(const QSeries& s);

/// Polynomial in the charge variable x with QSeries coefficients: finitely
/// many rows (charge exponent, series), distinct and sorted; all-zero rows
/// are not stored.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  int order() const { return order_; }
  void add(int charge, const QSeries& s);
  Rational coeff(int charge, int power) const;
  const std::map<int, QSeries>& rows() const { return rows_; }

  QSeries charge_sum() const;
  BivariateSeries truncated(int order) const;

  bool operator==(const BivariateSeries& other) const {
    return order_ == other.order_ && rows_ == other.rows_;
  }
  bool operator!=(const BivariateSeries& other) const { return !(*this == other); }

 private:
  int order_;
  std::map<int, QSeries> rows_;
};

/// The two documented candidates for the linear term of the fermionic sum,
/// with N_j = n_j + ... + n_k:
///   last_i:  L = N_{k-i+1} + ... + N_k   (the last i partial sums)
///   after_i: L = N_{i+1} + ... + N_k     (everything past the first i)
/// The verified convention, pinned against the exact dimension tables, is
/// last_i; it is the library default.
enum class LinearTerm { last_i, after_i };
inline constexpr LinearTerm kDefaultLinearTerm = LinearTerm::last_i;

/// The fermionic sum
///   sum_{n_1..n_k >= 0} x^{N_1+...+N_k} q^{N_1^2+...+N_k^2 + L} /
///                       ((q)_{n_1} ... (q)_{n_k})
/// truncated at the order; only finitely many tuples contribute.
BivariateSeries fermionic_sum(int level, int index, int order,
                              LinearTerm convention = kDefaultLinearTerm);

/// Count of monomials d_1 >= ... >= d_c >= 1 of weight n with the
/// difference-two condition d_j >= d_{j+level} + 2 for all j <= c - level and
/// at most level - index parts equal to 1.
int difference_two_count(int level, int index, int weight, int charge);

BivariateSeries difference_two_table(int level, int index, int order);

/// Exact bigraded dimensions of the quotient: coefficient of x^c q^n is the
/// monomial count minus the kernel piece dimension, computed by the ideal
/// engine.
BivariateSeries dimension_table(int level, int index, int order, int jobs = 1);

struct SeriesCompareReport {
  bool equal = true;
  int charge = 0;
  int power = 0;
  Rational lhs{0};
  Rational rhs{0};
  std::string str() const;
};

/// Coefficient-wise comparison up to the order in both variables; reports the
/// first mismatch in (charge, power) lexicographic order.
SeriesCompareReport compare(const BivariateSeries& a, const BivariateSeries& b, int order);

}  // namespace pslab
