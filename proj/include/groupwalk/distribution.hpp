#pragma once

#include <string>
#include <vector>

#include "groupwalk/group.hpp"
#include "groupwalk/rational.hpp"

namespace groupwalk {

/// Exact probability distribution over the elements of a finite group.
/// Probabilities are rationals that sum to exactly 1. Holds a non-owning
/// reference to the group, which must outlive the distribution.
class GroupDistribution {
 public:
  /// All mass on element k.
  static GroupDistribution point_mass(const FiniteGroup& g, int k);

  /// 1/n on every element; the convolution-invariant law.
  static GroupDistribution uniform(const FiniteGroup& g);

  /// Normalizes nonnegative weights (at least one positive) exactly.
  static GroupDistribution from_weights(const FiniteGroup& g, std::vector<Rational> weights);

  /// Accepts probabilities as given; they must be nonnegative and sum to
  /// exactly 1 (no normalization).
  static GroupDistribution from_probs(const FiniteGroup& g, std::vector<Rational> probs);

  const FiniteGroup& group() const { return *group_; }
  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& prob(int k) const { return probs_[k]; }
  const std::vector<Rational>& probs() const { return probs_; }

  /// Elements with positive probability, ascending.
  std::vector<int> support() const;
  bool full_support() const;

  /// Largest bit size over all probabilities; the resource-guard measure.
  std::size_t max_entry_bits() const;

  bool operator==(const GroupDistribution& o) const {
    return same_group(*group_, *o.group_) && probs_ == o.probs_;
  }

 private:
  GroupDistribution(const FiniteGroup& g, std::vector<Rational> probs)
      : group_(&g), probs_(std::move(probs)) {}

  const FiniteGroup* group_;
  std::vector<Rational> probs_;
};

/// Law of X*Y for independent X ~ x, Y ~ y on the same group; exact.
/// The orientation matters: x contributes the left factor.
GroupDistribution convolve(const GroupDistribution& x, const GroupDistribution& y);

namespace reference {
/// Literal O(n^2) double sum over pairs (k, l) accumulating into the
/// product index; the brute-force oracle for convolve.
GroupDistribution convolve(const GroupDistribution& x, const GroupDistribution& y);
}  // namespace reference

/// Total variation distance (1/2) * sum |x_k - y_k|, exact; a metric in [0, 1].
Rational tv_distance(const GroupDistribution& x, const GroupDistribution& y);

/// Parses the distribution file format: '#' comment lines; data lines
/// "k p" with 1-based index k and p a rational "num/den" or integer;
/// omitted indices get probability 0. With normalize = false the values
/// must sum to exactly 1; with normalize = true they are treated as
/// weights and normalized.
GroupDistribution parse_distribution(const std::string& text, const FiniteGroup& g,
                                     bool normalize = false);

/// Emits the exact format accepted by parse_distribution (full index list).
std::string serialize_distribution(const GroupDistribution& x);

}  // namespace groupwalk
