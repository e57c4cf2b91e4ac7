#include "pslab/fock.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pslab/algebra.hpp"

namespace pslab {

namespace {

std::string half_str(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::vector<std::pair<int, int>> part_runs(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> runs;
  for (int p : parts) {
    if (!runs.empty() && runs.back().first == p) {
      ++runs.back().second;
    } else {
      runs.emplace_back(p, 1);
    }
  }
  return runs;
}

std::vector<int> merge_descending(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<int>());
  return out;
}

}  // namespace

int FockBasisVector::heis_weight() const {
  return std::accumulate(heis.begin(), heis.end(), 0);
}

std::string FockBasisVector::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < heis.size(); ++i) {
    if (i) os << ",";
    os << heis[i];
  }
  os << "|" << half_str(twice_ell) << "]";
  return os.str();
}

FockVector::FockVector(FockBasisVector b, Rational c) {
  if (c != 0) terms_.emplace(std::move(b), std::move(c));
}

void FockVector::add_term(const FockBasisVector& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << to_string(a) << "*";
    os << b.str();
  }
  return os.str();
}

std::string tensor_key_str(const TensorKey& key) {
  std::ostringstream os;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) os << "⊗";
    os << key[i].str();
  }
  return os.str();
}

TensorVector::TensorVector(TensorKey key, Rational c) {
  if (c != 0) terms_.emplace(std::move(key), std::move(c));
}

void TensorVector::add_term(const TensorKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string TensorVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << to_string(a) << "*";
    os << tensor_key_str(k);
  }
  return os.str();
}

ModuleConfig::ModuleConfig(int level, int index) : level_(level), index_(index) {
  if (level < 1) throw std::invalid_argument("ModuleConfig: level must be >= 1");
  if (index < 0 || index > level) throw std::invalid_argument("ModuleConfig: index out of range");
  pattern_.assign(static_cast<size_t>(level), 0);
  for (int j = 0; j < index; ++j) pattern_[static_cast<size_t>(j)] = 1;
}

ModuleConfig::ModuleConfig(int level, int index, std::vector<int> pattern)
    : level_(level), index_(index), pattern_(std::move(pattern)) {
  if (level < 1) throw std::invalid_argument("ModuleConfig: level must be >= 1");
  if (index < 0 || index > level) throw std::invalid_argument("ModuleConfig: index out of range");
  if (static_cast<int>(pattern_.size()) != level) {
    throw std::invalid_argument("ModuleConfig: pattern length must equal level");
  }
  int ones = 0;
  for (int j : pattern_) {
    if (j != 0 && j != 1) throw std::invalid_argument("ModuleConfig: pattern entries must be 0/1");
    ones += j;
  }
  if (ones != index) throw std::invalid_argument("ModuleConfig: pattern must have index many ones");
}

Rational ModuleConfig::conformal_offset() const {
  return make_rational(index_ * index_ + 2 * index_, 4 * (level_ + 2));
}

Rational ModuleConfig::charge_offset() const { return make_rational(index_, 2); }

ModuleConfig ModuleConfig::complement() const {
  std::vector<int> flipped(pattern_.size());
  for (size_t j = 0; j < pattern_.size(); ++j) flipped[j] = 1 - pattern_[j];
  return ModuleConfig(level_, level_ - index_, std::move(flipped));
}

FockVector heis_action(int n, const FockVector& v) {
  FockVector out;
  for (const auto& [b, c] : v.terms()) {
    if (n == 0) {
      out.add_term(b, c * b.twice_ell);
    } else if (n < 0) {
      FockBasisVector nb = b;
      nb.heis = merge_descending(nb.heis, {-n});
      out.add_term(nb, c);
    } else {
      auto it = std::find(b.heis.begin(), b.heis.end(), n);
      if (it == b.heis.end()) continue;
      const long mult = std::count(b.heis.begin(), b.heis.end(), n);
      FockBasisVector nb = b;
      nb.heis.erase(nb.heis.begin() + (it - b.heis.begin()));
      out.add_term(nb, c * Rational(2 * n) * Rational(mult));
    }
  }
  return out;
}

const std::vector<std::pair<std::vector<int>, Rational>>& creation_series(int degree) {
  // A deque so that growing the table never relocates entries a concurrent
  // reader already holds a reference to.
  static std::shared_mutex mutex;
  static std::deque<std::vector<std::pair<std::vector<int>, Rational>>> table;
  if (degree < 0) throw std::invalid_argument("creation_series: negative degree");
  {
    std::shared_lock lock(mutex);
    if (degree < static_cast<int>(table.size())) return table[static_cast<size_t>(degree)];
  }
  std::unique_lock lock(mutex);
  while (static_cast<int>(table.size()) <= degree) {
    const int d = static_cast<int>(table.size());
    std::vector<std::pair<std::vector<int>, Rational>> entries;
    for (const std::vector<int>& parts : partitions_of(d)) {
      Rational coeff(1);
      for (const auto& [part, mult] : part_runs(parts)) {
        Integer den = factorial(static_cast<unsigned long>(mult));
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(mult));
        coeff /= Rational(den * pw);
      }
      entries.emplace_back(parts, std::move(coeff));
    }
    table.push_back(std::move(entries));
  }
  return table[static_cast<size_t>(degree)];
}

FockVector xalpha_mode_basis(int m, const FockBasisVector& b) {
  FockVector out;
  const int base_degree = -m - 1 - b.twice_ell;
  const auto runs = part_runs(b.heis);
  std::vector<int> nu(runs.size(), 0);
  while (true) {
    int removed_weight = 0;
    int removed_count = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
      removed_weight += nu[i] * runs[i].first;
      removed_count += nu[i];
    }
    const int degree = base_degree + removed_weight;
    if (degree >= 0) {
      // Annihilation side: (-2)^{#removed} * prod binom(mult, removed).
      Integer num = 1;
      for (size_t i = 0; i < runs.size(); ++i) {
        num *= binomial(static_cast<unsigned long>(runs[i].second),
                        static_cast<unsigned long>(nu[i]));
      }
      Integer two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(removed_count));
      num *= two_pow;
      if (removed_count % 2 != 0) num = -num;
      Rational annih_coeff(num);

      std::vector<int> remaining;
      remaining.reserve(b.heis.size());
      for (size_t i = 0; i < runs.size(); ++i) {
        for (int r = 0; r < runs[i].second - nu[i]; ++r) remaining.push_back(runs[i].first);
      }
      for (const auto& [created, create_coeff] : creation_series(degree)) {
        FockBasisVector nb;
        nb.heis = merge_descending(remaining, created);
        nb.twice_ell = b.twice_ell + 2;
        out.add_term(nb, annih_coeff * create_coeff);
      }
    }
    // Next sub-multiset.
    size_t i = 0;
    for (; i < runs.size(); ++i) {
      if (nu[i] < runs[i].second) {
        ++nu[i];
        break;
      }
      nu[i] = 0;
    }
    if (i == runs.size()) break;
  }
  return out;
}

FockVector xalpha_mode(int m, const FockVector& v) {
  FockVector out;
  for (const auto& [b, c] : v.terms()) {
    FockVector piece = xalpha_mode_basis(m, b);
    piece *= c;
    out += piece;
  }
  return out;
}

TensorVector diagonal_mode(int m, const TensorVector& w, int level) {
  TensorVector out;
  for (const auto& [key, c] : w.terms()) {
    if (static_cast<int>(key.size()) != level) {
      throw std::invalid_argument("diagonal_mode: tensor arity mismatch");
    }
    for (int slot = 0; slot < level; ++slot) {
      FockVector piece = xalpha_mode_basis(m, key[static_cast<size_t>(slot)]);
      for (const auto& [b, pc] : piece.terms()) {
        TensorKey nk = key;
        nk[static_cast<size_t>(slot)] = b;
        out.add_term(nk, c * pc);
      }
    }
  }
  return out;
}

TensorVector highest_weight_vector(const ModuleConfig& cfg) {
  TensorKey key(static_cast<size_t>(cfg.level()));
  for (int j = 0; j < cfg.level(); ++j) {
    key[static_cast<size_t>(j)].twice_ell = cfg.pattern()[static_cast<size_t>(j)];
  }
  return TensorVector(std::move(key), Rational(1));
}

TensorVector ealpha_half(const TensorVector& w) {
  TensorVector out;
  for (const auto& [key, c] : w.terms()) {
    TensorKey nk = key;
    for (auto& b : nk) b.twice_ell += 1;
    out.add_term(nk, c);
  }
  return out;
}

Rational relative_weight(const TensorKey& key, const ModuleConfig& cfg) {
  if (static_cast<int>(key.size()) != cfg.level()) {
    throw std::invalid_argument("relative_weight: tensor arity mismatch");
  }
  long num4 = 0;  // four times the relative weight
  for (size_t j = 0; j < key.size(); ++j) {
    const int tl = key[j].twice_ell;
    const int pj = cfg.pattern()[j];
    num4 += 4L * key[j].heis_weight() + static_cast<long>(tl) * tl - static_cast<long>(pj) * pj;
  }
  return make_rational(num4, 4);
}

Rational relative_charge(const TensorKey& key, const ModuleConfig& cfg) {
  if (static_cast<int>(key.size()) != cfg.level()) {
    throw std::invalid_argument("relative_charge: tensor arity mismatch");
  }
  long num2 = 0;  // twice the relative charge
  for (size_t j = 0; j < key.size(); ++j) {
    num2 += key[j].twice_ell - cfg.pattern()[j];
  }
  return make_rational(num2, 2);
}

int TensorBasis::find(const TensorKey& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

namespace {

void graded_basis_rec(const ModuleConfig& cfg, int slot, int charge_left, int weight_left,
                      TensorKey& prefix, TensorBasis& out) {
  const int k = cfg.level();
  const int pj = cfg.pattern()[static_cast<size_t>(slot)];
  const bool last = slot == k - 1;
  // Slot charge c_j contributes lattice weight c_j^2 + c_j * pattern_j.
  for (int cj = charge_left; cj >= 0; --cj) {
    if (last && cj != charge_left) break;
    const int lattice_weight = cj * cj + cj * pj;
    if (lattice_weight > weight_left) continue;
    const int budget = weight_left - lattice_weight;
    for (int hj = last ? budget : 0; hj <= budget; ++hj) {
      for (const std::vector<int>& parts : partitions_of(hj)) {
        prefix.push_back(FockBasisVector{parts, pj + 2 * cj});
        if (last) {
          out.index.emplace(prefix, static_cast<int>(out.keys.size()));
          out.keys.push_back(prefix);
        } else {
          graded_basis_rec(cfg, slot + 1, charge_left - cj, budget - hj, prefix, out);
        }
        prefix.pop_back();
      }
    }
  }
}

}  // namespace

TensorBasis graded_basis(const ModuleConfig& cfg, int weight, int charge) {
  TensorBasis out;
  if (weight < 0 || charge < 0) return out;
  TensorKey prefix;
  prefix.reserve(static_cast<size_t>(cfg.level()));
  graded_basis_rec(cfg, 0, charge, weight, prefix, out);
  return out;
}

Evaluator::Evaluator(ModuleConfig cfg) : cfg_(std::move(cfg)) {
  cache_.emplace(Monomial{}, highest_weight_vector(cfg_));
}

const TensorVector& Evaluator::monomial_image(const Monomial& m) {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  // Modes are applied right-to-left: the smallest part acts first, so the
  // recursion peels the largest part and applies it last.
  TensorVector image = diagonal_mode(-m.parts()[0], monomial_image(m.dropping_largest()),
                                     cfg_.level());
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.emplace(m, std::move(image));
  return it->second;
}

TensorVector Evaluator::evaluate(const GradedPolynomial& p) {
  TensorVector out;
  for (const auto& [m, c] : p.terms()) {
    TensorVector piece = monomial_image(m);
    piece *= c;
    out += piece;
  }
  return out;
}

TensorVector evaluate(const GradedPolynomial& p, const ModuleConfig& cfg) {
  Evaluator ev(cfg);
  return ev.evaluate(p);
}

}  // namespace pslab
