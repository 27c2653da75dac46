#pragma once

#include <array>
#include <cstdint>

namespace groupwalk {

/// Philox-4x64 counter-based pseudorandom generator, 10 rounds
/// (Salmon, Moraes, Dror, Shaw, SC'11). Constants are the reference
/// ones: multipliers 0xD2E7470EE14C6C93 / 0xCA5A826395121157 and
/// round-key increments 0x9E3779B97F4A7C15 / 0xBB67AE8584CAA73B.
///
/// The 128-bit key is (seed, stream). Independent substreams are keyed
/// directly: stream t of a given seed is Philox4x64(seed, t). Output is
/// the block sequence at counters 0, 1, 2, ... with the four 64-bit
/// words of each block emitted in order. Identical (seed, stream) gives
/// an identical output sequence on every platform.
class Philox4x64 {
 public:
  using u64 = std::uint64_t;
  using Block = std::array<u64, 4>;
  using Key = std::array<u64, 2>;

  explicit Philox4x64(u64 seed, u64 stream = 0) : key_{seed, stream} {}

  /// The 10-round Philox bijection applied to one counter block.
  static Block generate(Block counter, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B97F4A7C15ull;
        key[1] += 0xBB67AE8584CAA73Bull;
      }
      const auto [hi0, lo0] = mulhilo(0xD2E7470EE14C6C93ull, counter[0]);
      const auto [hi1, lo1] = mulhilo(0xCA5A826395121157ull, counter[2]);
      counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
    }
    return counter;
  }

  /// Next 64-bit output word.
  u64 next() {
    if (pos_ == 4) {
      buf_ = generate(ctr_, key_);
      increment(ctr_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

 private:
  static std::array<u64, 2> mulhilo(u64 a, u64 b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return {static_cast<u64>(p >> 64), static_cast<u64>(p)};
  }

  static void increment(Block& c) {
    for (auto& w : c) {
      if (++w != 0) break;
    }
  }

  Key key_;
  Block ctr_{};
  Block buf_{};
  int pos_ = 4;
};

/// Unbiased uniform integer in [0, bound) by rejection from 64-bit draws.
/// bound must be >= 1; bound == 1 consumes no output.
inline std::uint64_t uniform_below(Philox4x64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  if (bound == 1) return 0;
  // Accept r < q*bound where q = floor(2^64 / bound); then r % bound is exact.
  const std::uint64_t q = (~std::uint64_t{0} / bound) +
                          ((~std::uint64_t{0} % bound) == bound - 1 ? 1 : 0);
  const std::uint64_t limit = q * bound;  // 0 means the full 2^64 range
  for (;;) {
    const std::uint64_t r = rng.next();
    if (limit == 0 || r < limit) return r % bound;
  }
}

}  // namespace groupwalk
