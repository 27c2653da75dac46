#include "groupwalk/simulate.hpp"

#include <algorithm>

#include "groupwalk/omp_compat.hpp"
#include "groupwalk/walk.hpp"

namespace groupwalk {

ElementSampler::ElementSampler(const GroupDistribution& x, bool force_general) {
  const int n = x.size();
  d_ = 1;
  for (int k = 0; k < n; ++k) {
    mpz_class den = x.prob(k).den();
    mpz_lcm(d_.get_mpz_t(), d_.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class cap(1);
  cap <<= 256;
  if (d_ > cap) {
    throw ResourceLimitError("sampling modulus exceeds 2^256; coarsen the distribution");
  }

  cum_.resize(n);
  mpz_class acc(0);
  for (int k = 0; k < n; ++k) {
    // probs[k] * D is integral: den(probs[k]) divides D.
    mpz_class width = x.prob(k).num() * (d_ / x.prob(k).den());
    acc += width;
    cum_[k] = acc;
  }
  // acc == D because the probabilities sum to exactly 1.

  const std::size_t bits = mpz_sizeinbase(d_.get_mpz_t(), 2);
  words_ = static_cast<int>((bits + 63) / 64);
  mpz_class range(1);
  range <<= 64 * words_;
  limit_ = (range / d_) * d_;

  fast_ = !force_general && words_ == 1 && d_ > 1;
  if (fast_) {
    d64_ = d_.get_ui();
    mpz_class two64(1);
    two64 <<= 64;
    limit64_ = limit_ == two64 ? 0 : static_cast<std::uint64_t>(limit_.get_ui());
    cum64_.resize(n);
    for (int k = 0; k < n; ++k) cum64_[k] = static_cast<std::uint64_t>(cum_[k].get_ui());
  }
}

int ElementSampler::index_for(const mpz_class& u) const {
  // First k with u < cum_[k]; zero-probability cells have zero width and
  // are skipped automatically.
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  return static_cast<int>(it - cum_.begin());
}

int ElementSampler::sample(Philox4x64& rng) const {
  if (d_ == 1) return index_for(mpz_class(0));  // point mass; no entropy needed
  if (fast_) {
    for (;;) {
      const std::uint64_t r = rng.next();
      if (limit64_ == 0 || r < limit64_) {
        const std::uint64_t u = r % d64_;
        const auto it = std::upper_bound(cum64_.begin(), cum64_.end(), u);
        return static_cast<int>(it - cum64_.begin());
      }
    }
  }
  for (;;) {
    mpz_class r(0);
    for (int w = 0; w < words_; ++w) {
      const mpz_class word(static_cast<unsigned long>(rng.next()));
      r |= word << (64 * w);
    }
    if (r < limit_) {
      return index_for(r % d_);
    }
  }
}

int sample_element(const GroupDistribution& x, Philox4x64& rng) {
  return ElementSampler(x).sample(rng);
}

namespace {

SimulationResult finish_result(const GroupDistribution& xi, long steps, long trajectories,
                               std::uint64_t seed, std::vector<unsigned long long> counts) {
  const FiniteGroup& g = xi.group();
  const int n = g.order();
  SimulationResult result;
  result.steps = steps;
  result.trajectories = trajectories;
  result.seed = seed;
  result.counts = std::move(counts);
  result.empirical.resize(n);
  for (int k = 0; k < n; ++k) {
    result.empirical[k] =
        Rational(static_cast<long>(result.counts[k]), static_cast<long>(trajectories));
  }

  const GroupDistribution uniform = GroupDistribution::uniform(g);
  Rational tv_u(0);
  for (int k = 0; k < n; ++k) tv_u += abs(result.empirical[k] - uniform.prob(k));
  result.tv_to_uniform = (tv_u / Rational(2)).to_double();

  try {
    const GroupDistribution exact = exact_marginal(xi, steps);
    Rational tv_e(0);
    for (int k = 0; k < n; ++k) tv_e += abs(result.empirical[k] - exact.prob(k));
    result.tv_to_exact = (tv_e / Rational(2)).to_double();
  } catch (const ResourceLimitError&) {
    // Exact pipeline over budget: compare against the binary64 marginal.
    std::vector<double> cur(n);
    std::vector<double> xif(n);
    for (int k = 0; k < n; ++k) cur[k] = xif[k] = xi.prob(k).to_double();
    for (long s = 2; s <= steps; ++s) {
      std::vector<double> next(n, 0.0);
      for (int w = 0; w < n; ++w) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += cur[k] * xif[g.table().at(g.inverse(k), w)];
        next[w] = acc;
      }
      cur = std::move(next);
    }
    double tv = 0.0;
    for (int k = 0; k < n; ++k) tv += std::abs(result.empirical[k].to_double() - cur[k]);
    result.tv_to_exact = tv / 2.0;
  }
  return result;
}

void run_trajectories(const FiniteGroup& g, const ElementSampler& sampler, long steps,
                      long begin, long end, std::uint64_t seed,
                      std::vector<unsigned long long>& counts) {
  const CayleyTable& t = g.table();
  for (long traj = begin; traj < end; ++traj) {
    Philox4x64 rng(seed, static_cast<std::uint64_t>(traj));
    int x = sampler.sample(rng);
    for (long s = 2; s <= steps; ++s) {
      x = t.at(x, sampler.sample(rng));
    }
    ++counts[x];
  }
}

void check_simulation_params(long steps, long trajectories) {
  if (steps < 1) throw InvalidParameterError("steps must be >= 1");
  if (trajectories < 1) throw InvalidParameterError("trajectories must be >= 1");
}

}  // namespace

SimulationResult simulate_walk(const GroupDistribution& xi, long steps, long trajectories,
                               std::uint64_t seed) {
  check_simulation_params(steps, trajectories);
  const FiniteGroup& g = xi.group();
  const int n = g.order();
  const ElementSampler sampler(xi);
  std::vector<unsigned long long> counts(n, 0);
#pragma omp parallel
  {
    std::vector<unsigned long long> local(n, 0);
#pragma omp for schedule(static)
    for (long traj = 0; traj < trajectories; ++traj) {
      Philox4x64 rng(seed, static_cast<std::uint64_t>(traj));
      int x = sampler.sample(rng);
      for (long s = 2; s <= steps; ++s) {
        x = g.table().at(x, sampler.sample(rng));
      }
      ++local[x];
    }
// Counts merge by integer addition, so the merge order cannot change
// the result.
#pragma omp critical
    {
      for (int k = 0; k < n; ++k) counts[k] += local[k];
    }
  }
  return finish_result(xi, steps, trajectories, seed, std::move(counts));
}

namespace reference {

SimulationResult simulate_walk(const GroupDistribution& xi, long steps, long trajectories,
                               std::uint64_t seed) {
  check_simulation_params(steps, trajectories);
  const FiniteGroup& g = xi.group();
  const ElementSampler sampler(xi);
  std::vector<unsigned long long> counts(g.order(), 0);
  run_trajectories(g, sampler, steps, 0, trajectories, seed, counts);
  return finish_result(xi, steps, trajectories, seed, std::move(counts));
}

}  // namespace reference

}  // namespace groupwalk
