#include "groupwalk/walk.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace groupwalk {

FloatMatrix to_float(const StochasticMatrix& a) {
  const int n = a.order();
  FloatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a.at(i, j).to_double();
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(m.row(i).sum() - 1.0) > 1e-12 || std::abs(m.col(i).sum() - 1.0) > 1e-12) {
      throw NumericError("float mirror lost stochasticity beyond 1e-12");
    }
  }
  return m;
}

namespace {

void check_bits(std::size_t bits, const WalkLimits& limits) {
  if (bits > limits.max_entry_bits) {
    throw ResourceLimitError("entry bit size " + std::to_string(bits) + " exceeds the cap " +
                             std::to_string(limits.max_entry_bits) +
                             "; switch to the float pipeline");
  }
}

}  // namespace

GroupDistribution exact_marginal(const GroupDistribution& xi, long steps,
                                 const WalkLimits& limits) {
  if (steps < 1) throw InvalidParameterError("steps must be >= 1");
  GroupDistribution cur = xi;
  for (long m = 2; m <= steps; ++m) {
    cur = convolve(cur, xi);
    check_bits(cur.max_entry_bits(), limits);
  }
  return cur;
}

StochasticMatrix matrix_power(const StochasticMatrix& a, long m, const WalkLimits& limits) {
  if (m < 1) throw InvalidParameterError("exponent must be >= 1");
  StochasticMatrix result = StochasticMatrix::identity(a.order());
  StochasticMatrix base = a;
  for (long e = m; e > 0; e >>= 1) {
    if (e & 1) {
      result = matrix_multiply(result, base);
      check_bits(result.max_entry_bits(), limits);
    }
    if (e > 1) {
      base = matrix_multiply(base, base);
      check_bits(base.max_entry_bits(), limits);
    }
  }
  return result;
}

namespace {

struct Spectrum {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
};

Spectrum dense_spectrum(const FloatMatrix& m, bool with_vectors) {
  Eigen::EigenSolver<FloatMatrix> solver(m, with_vectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("dense eigensolver did not converge (order " +
                       std::to_string(m.rows()) + ", info " + std::to_string(solver.info()) +
                       ")");
  }
  Spectrum s;
  s.values = solver.eigenvalues();
  if (with_vectors) s.vectors = solver.eigenvectors();
  return s;
}

int index_nearest_one(const Eigen::VectorXcd& values) {
  int best = 0;
  double best_dist = std::abs(values(0) - std::complex<double>(1.0));
  for (int i = 1; i < values.size(); ++i) {
    const double d = std::abs(values(i) - std::complex<double>(1.0));
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

// Real eigenvector for the eigenvalue nearest 1, normalized to sum 1.
Eigen::VectorXd perron_vector(const Spectrum& s) {
  const int idx = index_nearest_one(s.values);
  const Eigen::VectorXcd v = s.vectors.col(idx);
  const double scale = v.cwiseAbs().maxCoeff();
  if (v.imag().cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw NumericError("Perron eigenvector came out non-real");
  }
  Eigen::VectorXd x = v.real();
  const double sum = x.sum();
  if (std::abs(sum) < 1e-12 * scale) {
    throw NumericError("Perron eigenvector has a vanishing sum");
  }
  return x / sum;
}

}  // namespace

PerronDiagnostics perron_limit_check(const StochasticMatrix& a, double tol) {
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j).sign() <= 0) {
        throw HypothesisError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not positive; Perron hypothesis not met");
      }
    }
  }
  const FloatMatrix af = to_float(a);
  const Spectrum right = dense_spectrum(af, true);
  const Spectrum left = dense_spectrum(af.transpose(), true);

  PerronDiagnostics d;
  d.spectral_radius = right.values.cwiseAbs().maxCoeff();
  d.rho_residual = std::abs(d.spectral_radius - 1.0);
  d.radius_ok = d.rho_residual <= tol;

  const int idx1 = index_nearest_one(right.values);
  d.second_modulus = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i != idx1) d.second_modulus = std::max(d.second_modulus, std::abs(right.values(i)));
  }
  d.simple = n == 1 || d.second_modulus < 1.0 - tol;

  // Perron normalization: x sums to 1 (so x = (1/n) * ones), then y is
  // scaled by x.y = 1 (so y = ones).
  const Eigen::VectorXd x = perron_vector(right);
  d.right_residual = (x.array() - 1.0 / n).abs().maxCoeff();
  d.right_uniform = d.right_residual <= tol;

  Eigen::VectorXd y = perron_vector(left);  // sums to 1
  const double xy = x.dot(y);
  if (std::abs(xy) < 1e-300) throw NumericError("left/right eigenvector product vanished");
  y /= xy;
  d.left_residual = (y.array() - 1.0).abs().maxCoeff();
  d.left_uniform = d.left_residual <= tol;

  d.outer_residual = ((x * y.transpose()).array() - 1.0 / n).abs().maxCoeff();
  d.outer_ok = d.outer_residual <= tol;
  return d;
}

double slem(const StochasticMatrix& a) {
  const int n = a.order();
  if (n == 1) return 0.0;
  const Spectrum s = dense_spectrum(to_float(a), false);
  std::vector<double> moduli(n);
  for (int i = 0; i < n; ++i) moduli[i] = std::abs(s.values(i));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  return std::min(moduli[1], 1.0);
}

namespace {

std::vector<double> to_float_probs(const GroupDistribution& x) {
  std::vector<double> v(x.size());
  for (int k = 0; k < x.size(); ++k) v[k] = x.prob(k).to_double();
  return v;
}

std::vector<double> float_convolve(const FiniteGroup& g, const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const int n = g.order();
  std::vector<double> r(n, 0.0);
  for (int w = 0; w < n; ++w) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += x[k] * y[g.table().at(g.inverse(k), w)];
    }
    r[w] = acc;
  }
  return r;
}

double float_tv_to_uniform(const std::vector<double>& x) {
  const double u = 1.0 / static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += std::abs(v - u);
  return sum / 2.0;
}

double float_tv(const std::vector<double>& x, const std::vector<double>& y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += std::abs(x[k] - y[k]);
  return sum / 2.0;
}

constexpr int kHistoryWindow = 256;
constexpr double kFloatPeriodTol = 1e-14;

// Exactly repeating marginals have bounded denominators (an exact
// repeat closes a finite orbit), so exact copies are kept in the
// periodicity window only while they stay small; larger marginals are
// matched through their binary64 mirrors.
constexpr std::size_t kExactHistoryMaxBits = 4096;

struct MarginalSnapshot {
  long step;
  std::optional<GroupDistribution> exact;
  std::vector<double> mirror;
};

}  // namespace

WalkReport analyze_walk(const GroupDistribution& xi, double epsilon, long max_steps,
                        const WalkLimits& limits) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidParameterError("epsilon must lie in (0, 1)");
  }
  if (max_steps < 1) throw InvalidParameterError("max_steps must be >= 1");

  const FiniteGroup& g = xi.group();
  const int n = g.order();
  WalkReport report;
  report.group_order = n;
  report.epsilon = epsilon;
  report.increment_support_full = xi.full_support();

  try {
    report.slem = slem(convolution_matrix(xi));
  } catch (const NumericError&) {
    // SLEM stays empty; the TV iteration below does not depend on it.
  }

  const GroupDistribution uniform = GroupDistribution::uniform(g);
  const Rational eps_exact = Rational::from_double(epsilon);
  const std::vector<double> xi_float = to_float_probs(xi);
  const bool track_history = !report.increment_support_full;

  bool exact = true;
  GroupDistribution cur = xi;
  std::vector<double> cur_float;
  std::deque<MarginalSnapshot> history;

  long m = 1;
  for (;; ++m) {
    bool within_epsilon;
    double tv;
    if (exact) {
      const Rational tv_exact = tv_distance(cur, uniform);
      tv = tv_exact.to_double();
      within_epsilon = tv_exact <= eps_exact;
    } else {
      tv = float_tv_to_uniform(cur_float);
      within_epsilon = tv <= epsilon;
    }
    report.tv_sequence.emplace_back(m, tv);
    if (within_epsilon) {
      report.converged = true;
      report.steps_to_epsilon = m;
      report.limit = uniform;
      break;
    }
    if (m >= max_steps) break;

    if (track_history) {
      std::optional<GroupDistribution> exact_copy;
      std::vector<double> mirror;
      if (exact) {
        mirror = to_float_probs(cur);
        if (cur.max_entry_bits() <= kExactHistoryMaxBits) exact_copy = cur;
      } else {
        mirror = cur_float;
      }
      history.push_back(MarginalSnapshot{m, std::move(exact_copy), std::move(mirror)});
      if (history.size() > kHistoryWindow) history.pop_front();
    }

    if (exact) {
      GroupDistribution next = convolve(cur, xi);
      if (next.max_entry_bits() > limits.max_entry_bits) {
        cur_float = to_float_probs(next);
        exact = false;
        report.float_fallback_from = m + 1;
      } else {
        cur = std::move(next);
      }
    } else {
      cur_float = float_convolve(g, cur_float, xi_float);
    }
  }

  if (!report.converged && track_history) {
    // Most recent snapshot first, so the first match is the smallest
    // period. A snapshot matches on exact equality or on TV < 1e-14
    // (exact TV when both sides are exact, mirror TV otherwise).
    const std::vector<double> cur_mirror = exact ? to_float_probs(cur) : cur_float;
    const Rational exact_tol = Rational::from_double(kFloatPeriodTol);
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
      bool match;
      if (exact && it->exact) {
        match = *it->exact == cur || tv_distance(*it->exact, cur) < exact_tol;
      } else {
        match = float_tv(it->mirror, cur_mirror) < kFloatPeriodTol;
      }
      if (match) {
        report.period = m - it->step;
        break;
      }
    }
  }
  return report;
}

long mixing_time(const GroupDistribution& xi, double epsilon) {
  if (!xi.full_support()) {
    throw HypothesisError("mixing time requires an increment law with full support");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidParameterError("epsilon must lie in (0, 1)");
  }
  const FiniteGroup& g = xi.group();
  const GroupDistribution uniform = GroupDistribution::uniform(g);
  const Rational eps_exact = Rational::from_double(epsilon);
  const WalkLimits limits;
  constexpr long kCap = 1'000'000;

  bool exact = true;
  GroupDistribution cur = xi;
  std::vector<double> cur_float;
  const std::vector<double> xi_float = to_float_probs(xi);
  for (long m = 1; m <= kCap; ++m) {
    if (exact) {
      if (tv_distance(cur, uniform) <= eps_exact) return m;
      GroupDistribution next = convolve(cur, xi);
      if (next.max_entry_bits() > limits.max_entry_bits) {
        cur_float = to_float_probs(next);
        exact = false;
      } else {
        cur = std::move(next);
      }
    } else {
      if (float_tv_to_uniform(cur_float) <= epsilon) return m;
      cur_float = float_convolve(g, cur_float, xi_float);
    }
  }
  throw NumericError("no convergence within 1000000 steps");
}

}  // namespace groupwalk
