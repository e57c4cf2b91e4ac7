#include "pslab/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pslab/algebra.hpp"
#include "pslab/ideal.hpp"
#include "pslab/parallel.hpp"

namespace pslab {

QSeries::QSeries(int order) {
  if (order < 0) throw std::invalid_argument("QSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const Rational& QSeries::coeff(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("QSeries::coeff");
  return coeffs_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(int n, const Rational& c) {
  if (n < 0 || n > order()) throw std::out_of_range("QSeries::set_coeff");
  coeffs_[static_cast<size_t>(n)] = c;
}

QSeries QSeries::truncated(int order) const {
  QSeries s(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n) s.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("QSeries: order mismatch");
  for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("QSeries: order mismatch");
  for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("QSeries: order mismatch");
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_.swap(out);
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

QSeries QSeries::shifted(int power) const {
  if (power < 0) throw std::invalid_argument("QSeries::shifted: negative power");
  QSeries s(order());
  for (int n = 0; n + power <= order(); ++n) {
    s.coeffs_[static_cast<size_t>(n + power)] = coeffs_[static_cast<size_t>(n)];
  }
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    const Rational& c = coeffs_[static_cast<size_t>(n)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (n == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "q";
      if (n > 1) os << "^" << n;
    }
  }
  if (first) return "0";
  return os.str();
}

QSeries q_pochhammer(int n, int order) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative subscript");
  QSeries s = QSeries::one(order);
  for (int j = 1; j <= n; ++j) {
    QSeries factor = QSeries::one(order);
    if (j <= order) factor.set_coeff(j, Rational(-1));
    s *= factor;
  }
  return s;
}

QSeries inverse(const QSeries& s) {
  if (s.coeff(0) == 0) throw std::invalid_argument("inverse: constant term is zero");
  const int order = s.order();
  QSeries out(order);
  const Rational c0_inv = 1 / s.coeff(0);
  out.set_coeff(0, c0_inv);
  for (int m = 1; m <= order; ++m) {
    Rational acc(0);
    for (int j = 1; j <= m; ++j) acc += s.coeff(j) * out.coeff(m - j);
    out.set_coeff(m, -acc * c0_inv);
  }
  return out;
}

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("BivariateSeries: negative order");
}

void BivariateSeries::add(int charge, const QSeries& s) {
  if (s.order() != order_) throw std::invalid_argument("BivariateSeries::add: order mismatch");
  auto [it, inserted] = rows_.emplace(charge, s);
  if (!inserted) it->second += s;
  if (it->second.is_zero()) rows_.erase(it);
}

Rational BivariateSeries::coeff(int charge, int power) const {
  auto it = rows_.find(charge);
  if (it == rows_.end()) return Rational(0);
  return it->second.coeff(power);
}

QSeries BivariateSeries::charge_sum() const {
  QSeries s(order_);
  for (const auto& [charge, row] : rows_) s += row;
  return s;
}

BivariateSeries BivariateSeries::truncated(int order) const {
  BivariateSeries out(order);
  for (const auto& [charge, row] : rows_) out.add(charge, row.truncated(order));
  return out;
}

namespace {

void fermionic_rec(int level, int index, int order, LinearTerm convention, int slot, int floor,
                   std::vector<int>& partial, BivariateSeries& out) {
  // partial holds N_k, N_{k-1}, ..., chosen so far (slot counts from the top:
  // slot j means we are choosing N_{level-j}).
  if (slot == level) {
    int charge = 0, squares = 0;
    for (int N : partial) {
      charge += N;
      squares += N * N;
    }
    int linear = 0;
    // partial[p] = N_{level-p}: the last i partial sums are partial[0..i-1],
    // the ones past the first `index` are partial[0..level-index-1].
    const int count = convention == LinearTerm::last_i ? index : level - index;
    for (int p = 0; p < count; ++p) linear += partial[static_cast<size_t>(p)];
    const int base = squares + linear;
    if (base > order) return;
    QSeries term = QSeries::one(order);
    int upper = 0;  // N_{j+1} while walking partial from the bottom
    for (int p = 0; p < level; ++p) {
      // n_j = N_j - N_{j+1} with N_j = partial[p], N_{j+1} = previous.
      term *= inverse(q_pochhammer(partial[static_cast<size_t>(p)] - upper, order));
      upper = partial[static_cast<size_t>(p)];
    }
    out.add(charge, term.shifted(base));
    return;
  }
  for (int N = floor;; ++N) {
    int squares = N * N;
    for (int p = 0; p < slot; ++p) {
      squares += partial[static_cast<size_t>(p)] * partial[static_cast<size_t>(p)];
    }
    // Remaining components are >= N, so the square sum only grows.
    if (squares + (level - slot - 1) * N * N > order) break;
    partial.push_back(N);
    fermionic_rec(level, index, order, convention, slot + 1, N, partial, out);
    partial.pop_back();
  }
}

}  // namespace

BivariateSeries fermionic_sum(int level, int index, int order, LinearTerm convention) {
  if (level < 1) throw std::invalid_argument("fermionic_sum: level must be >= 1");
  if (index < 0 || index > level) throw std::invalid_argument("fermionic_sum: index out of range");
  BivariateSeries out(order);
  std::vector<int> partial;
  partial.reserve(static_cast<size_t>(level));
  fermionic_rec(level, index, order, convention, 0, 0, partial, out);
  return out;
}

int difference_two_count(int level, int index, int weight, int charge) {
  if (level < 1) throw std::invalid_argument("difference_two_count: level must be >= 1");
  if (index < 0 || index > level) {
    throw std::invalid_argument("difference_two_count: index out of range");
  }
  int count = 0;
  for (const Monomial& m : enumerate_monomials(weight, charge, 1)) {
    const auto& d = m.parts();
    bool ok = true;
    for (size_t j = 0; j + static_cast<size_t>(level) < d.size() && ok; ++j) {
      if (d[j] < d[j + static_cast<size_t>(level)] + 2) ok = false;
    }
    if (!ok) continue;
    int ones = 0;
    for (auto it = d.rbegin(); it != d.rend() && *it == 1; ++it) ++ones;
    if (ones <= level - index) ++count;
  }
  return count;
}

BivariateSeries difference_two_table(int level, int index, int order) {
  BivariateSeries out(order);
  for (int c = 0; c <= order; ++c) {
    QSeries row(order);
    bool nonzero = false;
    for (int n = c; n <= order; ++n) {
      const int count = difference_two_count(level, index, n, c);
      if (count != 0) {
        row.set_coeff(n, Rational(count));
        nonzero = true;
      }
    }
    if (nonzero) out.add(c, row);
  }
  return out;
}

BivariateSeries dimension_table(int level, int index, int order, int jobs) {
  const ModuleConfig cfg(level, index);
  Evaluator ev(cfg);
  std::vector<std::pair<int, int>> grades;
  for (int n = 0; n <= order; ++n) {
    for (int c = 0; c <= n; ++c) grades.emplace_back(n, c);
  }
  std::vector<int> dims(grades.size(), 0);
  parallel_for(grades.size(), jobs, [&](size_t g) {
    const auto [n, c] = grades[g];
    const int monomials = static_cast<int>(enumerate_monomials(n, c, 1).size());
    if (monomials == 0) return;
    dims[g] = monomials - kernel_piece(cfg, n, c, &ev).dim();
  });
  BivariateSeries out(order);
  std::map<int, QSeries> rows;
  for (size_t g = 0; g < grades.size(); ++g) {
    if (dims[g] == 0) continue;
    const auto [n, c] = grades[g];
    auto [it, inserted] = rows.emplace(c, QSeries(order));
    it->second.set_coeff(n, Rational(dims[g]));
  }
  for (const auto& [c, row] : rows) out.add(c, row);
  return out;
}

std::string SeriesCompareReport::str() const {
  if (equal) return "equal";
  std::ostringstream os;
  os << "first mismatch at x^" << charge << " q^" << power << ": " << to_string(lhs)
     << " vs " << to_string(rhs);
  return os.str();
}

SeriesCompareReport compare(const BivariateSeries& a, const BivariateSeries& b, int order) {
  std::vector<int> charges;
  for (const auto& [c, row] : a.rows()) charges.push_back(c);
  for (const auto& [c, row] : b.rows()) charges.push_back(c);
  std::sort(charges.begin(), charges.end());
  charges.erase(std::unique(charges.begin(), charges.end()), charges.end());
  for (int c : charges) {
    for (int n = 0; n <= order; ++n) {
      const Rational lhs = a.coeff(c, n);
      const Rational rhs = b.coeff(c, n);
      if (lhs != rhs) return SeriesCompareReport{false, c, n, lhs, rhs};
    }
  }
  return SeriesCompareReport{};
}

}  // namespace pslab
