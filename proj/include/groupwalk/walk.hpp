#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "groupwalk/distribution.hpp"
#include "groupwalk/matrix.hpp"

namespace groupwalk {

/// binary64 mirror of a StochasticMatrix for eigen-analysis.
using FloatMatrix = Eigen::MatrixXd;

/// Converts exactly-stochastic entries to binary64; row and column sums
/// must land within 1e-12 of 1 or the conversion fails.
FloatMatrix to_float(const StochasticMatrix& a);

struct WalkLimits {
  /// Per-entry bit-size cap for the exact pipeline. Exceeding it makes
  /// exact_marginal / matrix_power fail with ResourceLimitError and
  /// makes analyze_walk fall back to binary64.
  std::size_t max_entry_bits = 1'000'000;
};

/// Exact law of X_m = xi_1 * ... * xi_m for i.i.d. increments, via m-1
/// exact convolutions.
GroupDistribution exact_marginal(const GroupDistribution& xi, long steps,
                                 const WalkLimits& limits = {});

/// Exact A^m by binary exponentiation.
StochasticMatrix matrix_power(const StochasticMatrix& a, long m, const WalkLimits& limits = {});

/// Numeric verification that a positive doubly stochastic matrix has the
/// Perron structure forcing A^m -> (1/n) J: spectral radius 1, simple,
/// uniform right and left eigenvectors, rank-one limit.
struct PerronDiagnostics {
  double spectral_radius = 0;
  double rho_residual = 0;     // |rho - 1|
  double second_modulus = 0;   // largest modulus among the other eigenvalues
  double right_residual = 0;   // max_i |x_i - 1/n| after sum normalization
  double left_residual = 0;    // max_i |y_i - 1| after x.y = 1 normalization
  double outer_residual = 0;   // max_ij |x_i y_j - 1/n|
  bool radius_ok = false;
  bool simple = false;
  bool right_uniform = false;
  bool left_uniform = false;
  bool outer_ok = false;
  bool pass() const { return radius_ok && simple && right_uniform && left_uniform && outer_ok; }
};

/// Requires all entries > 0 (throws HypothesisError otherwise, distinct
/// from a failed check). `tol` bounds the accepted residuals.
PerronDiagnostics perron_limit_check(const StochasticMatrix& a, double tol);

/// Second-largest eigenvalue modulus of the binary64 mirror, clamped to
/// [0, 1]. 1 - slem is the spectral gap driving the mixing rate; 0 for
/// the 1x1 matrix.
double slem(const StochasticMatrix& a);

/// Convergence diagnosis of the walk X_{m+1} = X_m * xi.
struct WalkReport {
  int group_order = 0;
  bool increment_support_full = false;
  bool converged = false;
  std::optional<GroupDistribution> limit;
  std::optional<long> steps_to_epsilon;
  double epsilon = 0;
  std::vector<std::pair<long, double>> tv_sequence;  // (m, TV to uniform)
  /// First step whose TV was computed in binary64 after the exact
  /// pipeline hit the bit-size cap; empty when fully exact.
  std::optional<long> float_fallback_from;
  std::optional<double> slem;
  std::optional<long> period;  // set when a non-converging cycle was detected
};

/// Iterates the marginal law, recording TV to uniform per step, declaring
/// convergence at TV <= epsilon (exact comparison while in the rational
/// pipeline). With non-full support and no convergence by max_steps,
/// compares the final marginal against the last (up to 256) stored
/// marginals and reports the smallest period found.
WalkReport analyze_walk(const GroupDistribution& xi, double epsilon = 1e-8,
                        long max_steps = 10'000, const WalkLimits& limits = {});

/// Least m with TV(L(X_m), uniform) <= epsilon. Requires full support so
/// the walk provably mixes; epsilon in (0, 1).
long mixing_time(const GroupDistribution& xi, double epsilon);

}  // namespace groupwalk
