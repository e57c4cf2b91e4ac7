#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "pslab/monomial.hpp"
#include "pslab/rational.hpp"

namespace pslab {

/// Basis vector of the lattice Fock space: a product of Heisenberg creation
/// operators applied to a lattice point e^{l*alpha} with l in (1/2)Z. `heis`
/// holds the created mode sizes as a descending partition; `twice_ell` stores
/// 2l so that everything stays integral.
struct FockBasisVector {
  std::vector<int> heis;
  int twice_ell = 0;

  bool operator==(const FockBasisVector& other) const {
    return twice_ell == other.twice_ell && heis == other.heis;
  }
  bool operator<(const FockBasisVector& other) const {
    if (twice_ell != other.twice_ell) return twice_ell < other.twice_ell;
    return heis < other.heis;
  }

  int heis_weight() const;
  /// Text form "[n1,n2,...|l]".
  std::string str() const;
};

/// Element of the Fock space: finite rational combination of basis vectors.
class FockVector {
 public:
  FockVector() = default;
  FockVector(FockBasisVector b, Rational c);

  const std::map<FockBasisVector, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const FockBasisVector& b, const Rational& c);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(const Rational& c);
  bool operator==(const FockVector& other) const { return terms_ == other.terms_; }
  bool operator!=(const FockVector& other) const { return !(*this == other); }
  std::string str() const;

 private:
  std::map<FockBasisVector, Rational> terms_;
};

/// Pure tensor of k Fock basis vectors, one per factor.
using TensorKey = std::vector<FockBasisVector>;

std::string tensor_key_str(const TensorKey& key);

/// Element of the k-fold tensor power of the Fock space.
class TensorVector {
 public:
  TensorVector() = default;
  TensorVector(TensorKey key, Rational c);

  const std::map<TensorKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const TensorKey& key, const Rational& c);
  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator-=(const TensorVector& other);
  TensorVector& operator*=(const Rational& c);
  bool operator==(const TensorVector& other) const { return terms_ == other.terms_; }
  bool operator!=(const TensorVector& other) const { return !(*this == other); }
  std::string str() const;

 private:
  std::map<TensorKey, Rational> terms_;
};

/// Which level-k module is in play: the level, the index i (0 <= i <= k), and
/// the 0/1 pattern selecting which tensor factor carries the charged vacuum.
/// The canonical pattern is i ones followed by k-i zeros. The conformal and
/// charge offsets of the highest weight vector are carried as metadata; all
/// weights and charges in computations are relative to that vector.
class ModuleConfig {
 public:
  ModuleConfig(int level, int index);
  ModuleConfig(int level, int index, std::vector<int> pattern);

  int level() const { return level_; }
  int index() const { return index_; }
  const std::vector<int>& pattern() const { return pattern_; }

  Rational conformal_offset() const;  // (i^2+2i)/(4(k+2))
  Rational charge_offset() const;     // i/2

  /// Same level, complementary index and pattern (1-j_1, ..., 1-j_k).
  ModuleConfig complement() const;

  bool operator==(const ModuleConfig& other) const {
    return level_ == other.level_ && index_ == other.index_ && pattern_ == other.pattern_;
  }

 private:
  int level_;
  int index_;
  std::vector<int> pattern_;
};

/// Heisenberg mode alpha(n) acting on one Fock factor: n < 0 creates a part
/// |n|, n > 0 annihilates a part n with factor 2n times its multiplicity,
/// n = 0 multiplies by 2l.
FockVector heis_action(int n, const FockVector& v);

/// The mode x_alpha(m): coefficient of x^{-m-1} in the lattice vertex
/// operator attached to e^alpha. On a basis vector u (x) e^{l alpha} it
/// applies the annihilation exponential exp(-sum_{n>0} alpha(n) x^{-n}/n)
/// followed by the creation exponential exp(sum_{n>0} alpha(-n) x^n/n),
/// shifts the lattice point to e^{(l+1) alpha}, includes the monomial x^{2l},
/// and extracts the x^{-m-1} coefficient. The lattice 2-cocycle is trivial:
/// no signs. Both exponentials terminate: annihilation on the finite
/// partition, creation at the required degree.
FockVector xalpha_mode(int m, const FockVector& v);
FockVector xalpha_mode_basis(int m, const FockBasisVector& b);

/// Coefficient of x^degree in exp(sum_{n>=1} alpha(-n) x^n / n): a table of
/// (created partition, rational coefficient) pairs. Memoized; safe under
/// concurrent use.
const std::vector<std::pair<std::vector<int>, Rational>>& creation_series(int degree);

/// Diagonal action of x_alpha(m) on the k-fold tensor power through the
/// comultiplication: the sum over slots of the one-factor action.
TensorVector diagonal_mode(int m, const TensorVector& w, int level);

/// The pure tensor of pattern-selected vacua: factor j is the bare lattice
/// point with 2l = pattern[j].
TensorVector highest_weight_vector(const ModuleConfig& cfg);

/// The tensor-power lattice translation operator: every factor's lattice
/// coordinate shifts by +1/2; Heisenberg parts and coefficients unchanged.
TensorVector ealpha_half(const TensorVector& w);

/// Relative bigrade of a basis tensor with respect to the highest weight
/// vector of cfg: weight = sum |heis_j| + sum (l_j^2 - (pattern_j/2)^2),
/// charge = sum l_j - i/2. Exact rationals (integers on reachable states).
Rational relative_weight(const TensorKey& key, const ModuleConfig& cfg);
Rational relative_charge(const TensorKey& key, const ModuleConfig& cfg);

/// Ordered basis of a bigraded piece of the target module realization, with
/// index lookup. Contains the support of the image of every doubly
/// homogeneous algebra element of the same bigrade.
struct TensorBasis {
  std::vector<TensorKey> keys;
  std::map<TensorKey, int> index;

  int size() const { return static_cast<int>(keys.size()); }
  int find(const TensorKey& key) const;
};

TensorBasis graded_basis(const ModuleConfig& cfg, int weight, int charge);

/// Evaluation of algebra elements on the highest weight vector, with a
/// monomial-image cache shared across bigrades. Thread safe: lookups take a
/// shared lock and computation happens outside any lock.
class Evaluator {
 public:
  explicit Evaluator(ModuleConfig cfg);

  const ModuleConfig& config() const { return cfg_; }
  /// Image of a single monomial, modes applied right-to-left.
  const TensorVector& monomial_image(const Monomial& m);
  TensorVector evaluate(const GradedPolynomial& p);

 private:
  ModuleConfig cfg_;
  std::map<Monomial, TensorVector> cache_;
  std::shared_mutex mutex_;
};

/// One-shot evaluation a . v_{cfg}.
TensorVector evaluate(const GradedPolynomial& p, const ModuleConfig& cfg);

}  // namespace pslab
