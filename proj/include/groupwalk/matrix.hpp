#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groupwalk/distribution.hpp"
#include "groupwalk/group.hpp"
#include "groupwalk/rational.hpp"

namespace groupwalk {

/// Dense n x n 0/1 matrix; holds permutation matrices and the all-ones
/// matrix J.
class BinaryMatrix {
 public:
  BinaryMatrix(int n, std::uint8_t fill = 0)
      : n_(n), e_(static_cast<std::size_t>(n) * n, fill) {}

  int order() const { return n_; }
  std::uint8_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, std::uint8_t v) { e_[static_cast<std::size_t>(i) * n_ + j] = v; }

  /// Exactly one 1 per row and per column.
  bool is_permutation() const;
  bool all_ones() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> e_;
};

/// Dense n x n matrix of exact rationals, validated doubly stochastic:
/// nonnegative entries, every row and every column sums to exactly 1.
class StochasticMatrix {
 public:
  /// Validates the invariants; throws InvalidParameterError otherwise.
  static StochasticMatrix from_entries(int n, std::vector<Rational> entries);

  static StochasticMatrix identity(int n);

  /// (1/n) J, the convolution matrix of the uniform distribution.
  static StochasticMatrix uniform_smoother(int n);

  int order() const { return n_; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Rational>& entries() const { return e_; }

  /// Largest bit size over all entries; the resource-guard measure.
  std::size_t max_entry_bits() const;

  bool operator==(const StochasticMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  StochasticMatrix(int n, std::vector<Rational> e) : n_(n), e_(std::move(e)) {}
  int n_;
  std::vector<Rational> e_;
};

/// P_sigma with entry (i, j) = 1 iff i = sigma(j).
BinaryMatrix permutation_matrix(const Permutation& sigma);

/// Con(X) = sum_k P[X = g_k] * P_{sigma_k}, the homomorphic image of a
/// distribution. Entry (i, j) equals P[X = g_i * g_j^-1]; always doubly
/// stochastic.
StochasticMatrix convolution_matrix(const GroupDistribution& x);

/// Exact product of doubly stochastic matrices; the class is closed
/// under multiplication and the result is re-validated.
StochasticMatrix matrix_multiply(const StochasticMatrix& a, const StochasticMatrix& b);

namespace reference {
/// Literal sum-of-permutation-matrices construction of Con(X); the
/// oracle for convolution_matrix.
StochasticMatrix convolution_matrix(const GroupDistribution& x);

/// Serial triple-loop product; the oracle for the parallel matrix_multiply.
StochasticMatrix matrix_multiply(const StochasticMatrix& a, const StochasticMatrix& b);
}  // namespace reference

struct HomomorphismWitness {
  int i, j;        // first differing entry
  Rational lhs;    // Con(X*Y) at (i, j)
  Rational rhs;    // (Con(X) Con(Y)) at (i, j)
};

struct HomomorphismCheck {
  bool holds = false;
  std::optional<HomomorphismWitness> witness;
};

/// Verifies Con(X*Y) = Con(X) Con(Y) entrywise in exact arithmetic.
HomomorphismCheck check_homomorphism(const GroupDistribution& x, const GroupDistribution& y);

/// The same identity evaluated on a raw magma table with probability
/// vectors; works on non-groups, where it may fail. Negative-control
/// surface for the homomorphism.
HomomorphismCheck raw_homomorphism_check(const CayleyTable& t, const std::vector<Rational>& x,
                                         const std::vector<Rational>& y);

/// sum_k p_k P_{row k} on an arbitrary table; row-major n x n result.
std::vector<Rational> raw_convolution_matrix(const CayleyTable& t,
                                             const std::vector<Rational>& probs);

/// Law of the product under an arbitrary table (double-sum accumulation).
std::vector<Rational> raw_convolve(const CayleyTable& t, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y);

/// n x n index matrix, row-major.
struct IndexMatrix {
  int n = 0;
  std::vector<std::int32_t> v;
  int at(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
};

/// K with K[i][j] = the unique k such that sigma_k(j) = i, i.e.
/// g_k = g_i * g_j^-1. Exists and is unique for every cell exactly when
/// every column of the table is a permutation; otherwise throws
/// StructureError naming the first bad cell.
IndexMatrix unique_k_structure(const CayleyTable& t);
IndexMatrix unique_k_structure(const FiniteGroup& g);

/// The permutation matrices P_{sigma_1..n} are linearly independent.
/// Checked two ways: the disjoint-support argument via
/// unique_k_structure, and an exact rank computation on the stacked
/// n^2 x n vectorizations. True only when both routes confirm.
bool check_linear_independence(const FiniteGroup& g);

/// sum_k P_{sigma_k}; must equal the all-ones matrix J, else throws
/// StructureError (signals a non-group table).
BinaryMatrix sum_permutation_matrices(const CayleyTable& t);
BinaryMatrix sum_permutation_matrices(const FiniteGroup& g);

/// Inverse of convolution_matrix: reads the distribution back from a
/// matrix in the span of {P_{sigma_k}}, checking all n^2 cells for
/// consistency (a membership test for the span). Throws StructureError
/// on inconsistent cells; the result must be a valid distribution.
GroupDistribution recover_distribution(const StochasticMatrix& m, const FiniteGroup& g);

}  // namespace groupwalk
