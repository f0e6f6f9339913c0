#pragma once

#include <cstdint>

namespace rollout {

/// splitmix64 output function; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ keyed by (master_seed, stream). Distinct keys give
/// independent streams, so per-trial generators can run in any order on any
/// worker and still produce the same draws. Output is platform-independent;
/// no standard-library distributions are involved.
class Rng {
 public:
  Rng(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t key = master_seed ^ mix64(stream ^ 0x632BE59BD9B4E019ULL);
    for (auto& word : state_) {
      key += 0x9E3779B97F4A7C15ULL;
      word = mix64(key);
    }
    state_[0] |= 1;  // all-zero state is unreachable
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [0, hi).
  double uniform(double hi) { return uniform01() * hi; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace rollout
