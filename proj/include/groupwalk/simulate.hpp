#pragma once

#include <cstdint>
#include <vector>

#include "groupwalk/distribution.hpp"
#include "groupwalk/philox.hpp"
#include "groupwalk/rational.hpp"

namespace groupwalk {

/// Exact inverse-CDF sampler for a rational distribution. Draws a
/// uniform integer U in [0, D), D = lcm of the denominators, and maps it
/// through the cumulative partition, whose cell widths are exactly
/// probs[k] * D. Bias-free: per attempt it consumes ceil(bits(D)/64)
/// 64-bit words R (little-endian composition) and accepts iff
/// R < floor(2^(64*words)/D) * D, so the accepted R mod D is uniform.
class ElementSampler {
 public:
  /// force_general disables the single-word fast path (test hook; both
  /// paths consume the generator identically).
  explicit ElementSampler(const GroupDistribution& x, bool force_general = false);

  const mpz_class& modulus() const { return d_; }
  int words_per_attempt() const { return words_; }
  bool fast_path() const { return fast_; }

  /// The partition map [0, D) -> element index; u must be in [0, D).
  int index_for(const mpz_class& u) const;

  int sample(Philox4x64& rng) const;

 private:
  mpz_class d_;                     // modulus D, capped at 2^256
  std::vector<mpz_class> cum_;      // cum_[k] = sum_{l <= k} probs[l] * D
  mpz_class limit_;                 // acceptance bound for the composed draw
  int words_ = 1;
  bool fast_ = false;
  std::uint64_t d64_ = 0;
  std::uint64_t limit64_ = 0;       // 0 means "accept everything"
  std::vector<std::uint64_t> cum64_;
};

/// One draw distributed exactly as x. Builds the sampler per call; use
/// ElementSampler directly for repeated sampling.
int sample_element(const GroupDistribution& x, Philox4x64& rng);

/// Aggregate of Monte Carlo trajectories of X_m = xi_1 * ... * xi_m.
struct SimulationResult {
  long steps = 0;
  long trajectories = 0;
  std::uint64_t seed = 0;
  std::vector<unsigned long long> counts;  // final-state counts, sum = trajectories
  std::vector<Rational> empirical;         // counts / trajectories, sums to exactly 1
  double tv_to_exact = 0;    // TV(empirical, L(X_m)) via the exact pipeline
  double tv_to_uniform = 0;  // TV(empirical, uniform)

  bool operator==(const SimulationResult&) const = default;
};

/// Runs n_traj independent walks of m steps. Trajectory t uses the
/// Philox substream keyed (seed, t), so the result is bit-identical for
/// fixed inputs regardless of thread count or execution order.
SimulationResult simulate_walk(const GroupDistribution& xi, long steps, long trajectories,
                               std::uint64_t seed);

namespace reference {
/// Serial trajectory loop; must equal the parallel simulate_walk exactly.
SimulationResult simulate_walk(const GroupDistribution& xi, long steps, long trajectories,
                               std::uint64_t seed);
}  // namespace reference

}  // namespace groupwalk
