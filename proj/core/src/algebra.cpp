#include "pslab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace pslab {

namespace {

void enumerate_rec(int weight, int charge, int max_part, int min_part, std::vector<int>& prefix,
                   std::vector<Monomial>& out) {
  if (charge == 0) {
    if (weight == 0) out.push_back(Monomial(prefix));
    return;
  }
  // Largest admissible first part first => decreasing-lex output order.
  int hi = std::min(max_part, weight - min_part * (charge - 1));
  for (int d = hi; d >= min_part; --d) {
    if (d * charge < weight) break;  // remaining parts are <= d, cannot reach weight
    prefix.push_back(d);
    enumerate_rec(weight - d, charge - 1, d, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int weight, int charge, int min_part) {
  if (min_part < 1) throw std::invalid_argument("enumerate_monomials: min_part must be >= 1");
  std::vector<Monomial> out;
  if (weight < 0 || charge < 0) return out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(charge));
  enumerate_rec(weight, charge, weight, min_part, prefix, out);
  return out;
}

std::vector<std::vector<int>> partitions_of(int weight, int min_part) {
  std::vector<std::vector<int>> out;
  if (weight < 0) return out;
  for (int charge = 0; charge * min_part <= weight; ++charge) {
    for (const Monomial& m : enumerate_monomials(weight, charge, min_part)) {
      out.push_back(m.parts());
    }
  }
  return out;
}

MonomialBasis MonomialBasis::bigrade(int weight, int charge, int min_part) {
  MonomialBasis b;
  b.monomials = enumerate_monomials(weight, charge, min_part);
  for (int i = 0; i < static_cast<int>(b.monomials.size()); ++i) {
    b.index.emplace(b.monomials[i], i);
  }
  return b;
}

int MonomialBasis::find(const Monomial& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

GradedPolynomial tau_power(const GradedPolynomial& p, int s) {
  GradedPolynomial r;
  for (const auto& [m, c] : p.terms()) r.add_term(m.shifted(s), c);
  return r;
}

GradedPolynomial rho(const GradedPolynomial& p) {
  GradedPolynomial r;
  for (const auto& [m, c] : p.terms()) {
    if (!m.has_part_one()) r.add_term(m, c);
  }
  return r;
}

GradedPolynomial relation_generator(int level, int t, int variant) {
  if (level < 1) throw std::invalid_argument("relation_generator: level must be >= 1");
  if (variant != 0 && variant != 1) {
    throw std::invalid_argument("relation_generator: variant must be 0 or 1");
  }
  const int min_part = variant == 0 ? 1 : 2;
  const int factors = level + 1;
  GradedPolynomial r;
  if (t < min_part * factors) return r;
  const Integer numer = factorial(static_cast<unsigned long>(factors));
  for (const Monomial& m : enumerate_monomials(t, factors, min_part)) {
    Integer denom = 1;
    const auto& parts = m.parts();
    size_t i = 0;
    while (i < parts.size()) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      denom *= factorial(static_cast<unsigned long>(j - i));
      i = j;
    }
    r.add_term(m, Rational(numer / denom));
  }
  return r;
}

GradedPolynomial xalpha_power(int exponent) {
  return GradedPolynomial(Monomial::power(1, exponent));
}

}  // namespace pslab
