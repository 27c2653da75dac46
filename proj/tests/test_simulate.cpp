#include <doctest.h>

#include <array>

#include "groupwalk/json_io.hpp"
#include "groupwalk/philox.hpp"
#include "groupwalk/random_dist.hpp"
#include "groupwalk/simulate.hpp"
#include "groupwalk/walk.hpp"
#include "test_util.hpp"

using namespace groupwalk;

TEST_CASE("Philox4x64-10 known-answer vectors") {
  // Frozen from two independent implementations of the reference
  // algorithm (block at the given counter, 10 rounds).
  using Block = Philox4x64::Block;
  CHECK(Philox4x64::generate({0, 0, 0, 0}, {0, 0}) ==
        Block{0x16554d9eca36314cull, 0xdb20fe9d672d0fdcull, 0xd7e772cee186176bull,
              0x7e68b68aec7ba23bull});
  CHECK(Philox4x64::generate({1, 0, 0, 0}, {0, 0}) ==
        Block{0x02f4ba6408e4d89bull, 0x3dd62b0b9ca8c5b2ull, 0x1c8667a55d902e79ull,
              0x907d7a052fd5b4dcull});
  CHECK(Philox4x64::generate({0, 0, 0, 0}, {1, 0}) ==
        Block{0xcb7ea744cf19bb4cull, 0xa34eacbe1377d650ull, 0xe8dbce5eb7b8301full,
              0x344790248cacfe2full});
  CHECK(Philox4x64::generate({0, 0, 0, 0}, {0x243f6a8885a308d3ull, 0x13198a2e03707344ull}) ==
        Block{0x1036e39633fb9b1dull, 0x9af91221c3743314ull, 0x584530fc57441d7bull,
              0x431ec5b7324dd2ffull});
  CHECK(Philox4x64::generate({0, 0, 0, 0}, {42, 7}) ==
        Block{0x2fd1bc0d2c8697bbull, 0x8ee17f67a549bba6ull, 0x1bdce1f847e7df47ull,
              0xe123b6bbe4e89f03ull});

  // The streaming interface emits block words in order, blocks at
  // counters 0, 1, 2, ...
  Philox4x64 rng(42, 7);
  CHECK(rng.next() == 0x2fd1bc0d2c8697bbull);
  CHECK(rng.next() == 0x8ee17f67a549bba6ull);
  CHECK(rng.next() == 0x1bdce1f847e7df47ull);
  CHECK(rng.next() == 0xe123b6bbe4e89f03ull);
  CHECK(rng.next() == 0xa64064f34e84b9a3ull);  // counter 1, word 0

  Philox4x64 s0(5, 0), s1(5, 1);
  CHECK(s0.next() != s1.next());
}

TEST_CASE("uniform_below is in range and unbiased over small bounds") {
  Philox4x64 rng(1, 0);
  CHECK(uniform_below(rng, 1) == 0);
  std::array<int, 4> histogram{};
  for (int i = 0; i < 4000; ++i) {
    const std::uint64_t v = uniform_below(rng, 4);
    REQUIRE(v < 4);
    ++histogram[v];
  }
  for (int count : histogram) CHECK(count > 800);
}

TEST_CASE("sampler partition widths are exactly probs * D") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  const GroupDistribution x = GroupDistribution::from_probs(
      z6, {Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 6), Rational(1, 6),
           Rational(1, 6)});
  const ElementSampler sampler(x);
  CHECK(sampler.modulus() == 24);
  // Enumerate every u in [0, D): category counts must equal probs * D.
  std::vector<long> counts(6, 0);
  for (long u = 0; u < 24; ++u) ++counts[sampler.index_for(mpz_class(u))];
  CHECK(counts == std::vector<long>{6, 3, 3, 4, 4, 4});
}

TEST_CASE("sampler handles zero-probability cells and point masses") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const GroupDistribution x =
      GroupDistribution::from_probs(z3, {Rational(1, 2), Rational(0), Rational(1, 2)});
  const ElementSampler sampler(x);
  for (long u = 0; u < 2; ++u) CHECK(sampler.index_for(mpz_class(u)) != 1);
  Philox4x64 rng(3, 0);
  for (int i = 0; i < 200; ++i) CHECK(sampler.sample(rng) != 1);

  const GroupDistribution pm = GroupDistribution::point_mass(z3, 2);
  const ElementSampler psampler(pm);
  CHECK(psampler.modulus() == 1);
  Philox4x64 rng2(4, 0);
  for (int i = 0; i < 10; ++i) CHECK(psampler.sample(rng2) == 2);
}

TEST_CASE("fast and general sampling paths agree draw for draw") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  Philox4x64 seed_rng(101, 0);
  const GroupDistribution x = random_distribution(z6, seed_rng, true);
  const ElementSampler fast(x);
  const ElementSampler general(x, /*force_general=*/true);
  CHECK(fast.fast_path());
  CHECK_FALSE(general.fast_path());
  CHECK(fast.words_per_attempt() == general.words_per_attempt());
  Philox4x64 a(77, 3), b(77, 3);
  for (int i = 0; i < 5000; ++i) CHECK(fast.sample(a) == general.sample(b));
}

TEST_CASE("sampling modulus is capped at 2^256") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  mpz_class huge(1);
  huge <<= 257;
  const GroupDistribution x = GroupDistribution::from_probs(
      z2, {Rational(mpz_class(1), huge), Rational(huge - 1, huge)});
  CHECK_THROWS_AS(ElementSampler{x}, ResourceLimitError);
}

TEST_CASE("multi-word draws cover large moduli") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  mpz_class big(1);
  big <<= 200;  // D = 2^200 needs four 64-bit words
  const GroupDistribution x = GroupDistribution::from_probs(
      z2, {Rational(mpz_class(1), big), Rational(big - 1, big)});
  const ElementSampler sampler(x);
  CHECK(sampler.words_per_attempt() == 4);
  Philox4x64 rng(5, 0);
  int ones = 0;
  for (int i = 0; i < 50; ++i) ones += sampler.sample(rng);
  CHECK(ones == 50);  // index 0 has probability 2^-200
}

TEST_CASE("deterministic walks") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  const SimulationResult r =
      simulate_walk(GroupDistribution::point_mass(z6, 1), 4, 100, 9);
  CHECK(r.counts == std::vector<unsigned long long>{0, 0, 0, 0, 100, 0});
  CHECK(r.tv_to_exact == 0.0);

  const SimulationResult id =
      simulate_walk(GroupDistribution::point_mass(z6, z6.identity()), 7, 50, 9);
  CHECK(id.counts[z6.identity()] == 50);
  CHECK(id.tv_to_exact == 0.0);

  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  const SimulationResult refl =
      simulate_walk(GroupDistribution::point_mass(d4, 4), 2, 10, 9);
  CHECK(refl.counts[d4.identity()] == 10);
}

TEST_CASE("simulation is reproducible and matches the serial reference") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  Philox4x64 seed_rng(103, 0);
  const GroupDistribution xi = random_distribution(s3, seed_rng, true);

  const SimulationResult a = simulate_walk(xi, 10, 5000, 31337);
  const SimulationResult b = simulate_walk(xi, 10, 5000, 31337);
  CHECK(a == b);
  CHECK(dump_json(simulation_json(a)) == dump_json(simulation_json(b)));

  const SimulationResult serial = reference::simulate_walk(xi, 10, 5000, 31337);
  CHECK(a == serial);

  const SimulationResult other_seed = simulate_walk(xi, 10, 5000, 31338);
  CHECK_FALSE(a == other_seed);

  unsigned long long total = 0;
  for (auto c : a.counts) total += c;
  CHECK(total == 5000);
  Rational sum(0);
  for (const auto& p : a.empirical) sum += p;
  CHECK(sum == Rational(1));

  const SimulationResult single = simulate_walk(xi, 3, 1, 5);
  CHECK(*std::max_element(single.counts.begin(), single.counts.end()) == 1);

  CHECK_THROWS_AS(simulate_walk(xi, 0, 10, 1), InvalidParameterError);
  CHECK_THROWS_AS(simulate_walk(xi, 10, 0, 1), InvalidParameterError);
}

TEST_CASE("fair-coin counts match the pinned regression values") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const SimulationResult r = simulate_walk(GroupDistribution::uniform(z2), 1, 1'000'000, 2024);
  // Binomial(10^6, 1/2): both counts within 3 standard deviations of the
  // mean 500000 (sigma = 500). Exact values pinned for regression.
  CHECK(r.counts[0] >= 498'500);
  CHECK(r.counts[0] <= 501'500);
  CHECK(r.counts[0] + r.counts[1] == 1'000'000);
  CHECK(r.counts == std::vector<unsigned long long>{500'511, 499'489});
}

TEST_CASE("empirical law approaches the exact marginal as N grows") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const GroupDistribution xi = GroupDistribution::from_probs(
      s3, {Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 6), Rational(1, 6),
           Rational(1, 6)});
  const double tv1k = simulate_walk(xi, 12, 1'000, 555).tv_to_exact;
  const double tv10k = simulate_walk(xi, 12, 10'000, 555).tv_to_exact;
  const double tv100k = simulate_walk(xi, 12, 100'000, 555).tv_to_exact;
  CHECK(tv100k < tv1k);
  CHECK(tv10k < tv1k);
  // Regression pins for the fixed seed.
  CHECK(tv1k == doctest::Approx(0.037).epsilon(1e-9));
  CHECK(tv10k == doctest::Approx(0.0074666668).epsilon(1e-6));
  CHECK(tv100k == doctest::Approx(0.0025333335).epsilon(1e-6));
}

TEST_CASE("long S_3 walk lands within 0.01 of uniform") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const GroupDistribution xi = GroupDistribution::from_probs(
      s3, {Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 6), Rational(1, 6),
           Rational(1, 6)});
  const SimulationResult r = simulate_walk(xi, 50, 200'000, 20240601);
  CHECK(r.tv_to_uniform <= 0.01);
  CHECK(r.tv_to_exact <= 0.01);
}
