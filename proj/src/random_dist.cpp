#include "groupwalk/random_dist.hpp"

#include <algorithm>

namespace groupwalk {

GroupDistribution random_distribution(const FiniteGroup& g, Philox4x64& rng, bool full_support,
                                      int resolution_bits) {
  if (resolution_bits < 1 || resolution_bits > 62) {
    throw InvalidParameterError("resolution_bits must be in [1, 62]");
  }
  const int n = g.order();
  const std::uint64_t d = std::uint64_t{1} << resolution_bits;
  if (full_support && d < static_cast<std::uint64_t>(n)) {
    throw InvalidParameterError("resolution too coarse for a full-support distribution");
  }
  const long den = static_cast<long>(d);
  if (n == 1) {
    return GroupDistribution::from_probs(g, {Rational(1)});
  }

  const std::uint64_t budget = full_support ? d - static_cast<std::uint64_t>(n) : d;
  std::vector<std::uint64_t> cuts(n - 1);
  for (auto& c : cuts) c = uniform_below(rng, budget + 1);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Rational> probs(n);
  std::uint64_t prev = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t next = k + 1 < n ? cuts[k] : budget;
    std::uint64_t part = next - prev;
    if (full_support) part += 1;
    probs[k] = Rational(static_cast<long>(part), den);
    prev = next;
  }
  return GroupDistribution::from_probs(g, std::move(probs));
}

}  // namespace groupwalk
