#pragma once

#include <cstdint>

namespace cimono {

/// SplitMix64 finalizer step. Used for seed expansion and stream derivation,
/// never as the simulation generator itself.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic sub-stream keys. The rule is part of the reproducibility
/// contract: key = sm(sm(sm(seed) ^ a) ^ b) where sm is one SplitMix64 step
/// starting from the given state. Any implementation following the same rule
/// with the same generator reproduces the exact variate sequences.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t a,
                                        std::uint64_t b = 0) noexcept {
  std::uint64_t s = seed;
  std::uint64_t k = splitmix64_next(s);
  s = k ^ a;
  k = splitmix64_next(s);
  s = k ^ b;
  return splitmix64_next(s);
}

/// xoshiro256++ (Blackman & Vigna). 64-bit state-of-the-art small generator;
/// state is seeded from SplitMix64 so that any 64-bit seed is acceptable.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64_next(sm);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw in the open interval (0, 1): 53 random bits offset by half
  /// an ulp, so logs and reciprocals of u and 1-u are always finite.
  double uniform01() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace cimono
