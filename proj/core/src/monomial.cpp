#include "pslab/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pslab {

Monomial::Monomial(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int d : parts_) {
    if (d < 1) throw std::invalid_argument("Monomial: parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Monomial Monomial::power(int part, int exponent) {
  if (exponent < 0) throw std::invalid_argument("Monomial::power: negative exponent");
  return Monomial(std::vector<int>(static_cast<size_t>(exponent), part));
}

int Monomial::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Monomial::min_part() const { return parts_.empty() ? 0 : parts_.back(); }

Monomial Monomial::times(const Monomial& other) const {
  Monomial r;
  r.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             r.parts_.begin(), std::greater<int>());
  return r;
}

Monomial Monomial::shifted(int s) const {
  Monomial r;
  r.parts_.reserve(parts_.size());
  for (int d : parts_) {
    if (d + s < 1) throw std::domain_error("Monomial::shifted: part would leave the algebra");
    r.parts_.push_back(d + s);
  }
  return r;
}

Monomial Monomial::dropping_largest() const {
  if (parts_.empty()) throw std::logic_error("Monomial::dropping_largest on the unit");
  Monomial r;
  r.parts_.assign(parts_.begin() + 1, parts_.end());
  return r;
}

bool Monomial::operator<(const Monomial& other) const {
  const int w1 = weight(), w2 = other.weight();
  if (w1 != w2) return w1 < w2;
  if (parts_.size() != other.parts_.size()) return parts_.size() < other.parts_.size();
  // Equal bigrade: lexicographically larger part sequence comes first.
  return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(), parts_.begin(),
                                      parts_.end());
}

std::string Monomial::str() const {
  if (parts_.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) os << "*";
    os << "x(-" << parts_[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

GradedPolynomial::GradedPolynomial(Monomial m, Rational coeff) {
  if (coeff != 0) terms_.emplace(std::move(m), std::move(coeff));
}

Rational GradedPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const GradedPolynomial& other) {
  GradedPolynomial result;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      result.add_term(m1.times(m2), c1 * c2);
    }
  }
  terms_.swap(result.terms_);
  return *this;
}

bool GradedPolynomial::doubly_homogeneous(int* weight, int* charge) const {
  if (terms_.empty()) return true;
  const int w = terms_.begin()->first.weight();
  const int c = terms_.begin()->first.charge();
  for (const auto& [m, coeff] : terms_) {
    if (m.weight() != w || m.charge() != c) return false;
  }
  if (weight) *weight = w;
  if (charge) *charge = c;
  return true;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << to_string(a);
    } else if (a == 1) {
      os << m.str();
    } else {
      os << to_string(a) << "*" << m.str();
    }
  }
  return os.str();
}

}  // namespace pslab
