#pragma once

#include "groupwalk/distribution.hpp"
#include "groupwalk/philox.hpp"

namespace groupwalk {

/// Random distribution with exactly-normalized rational probabilities
/// k_i / 2^resolution_bits summing exactly to 1, drawn as a uniform
/// composition of 2^resolution_bits (n-1 sorted cut points; the parts
/// are the gaps). With full_support every part is >= 1.
GroupDistribution random_distribution(const FiniteGroup& g, Philox4x64& rng, bool full_support,
                                      int resolution_bits = 16);

}  // namespace groupwalk
