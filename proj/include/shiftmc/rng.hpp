#ifndef SHIFTMC_RNG_HPP
#define SHIFTMC_RNG_HPP

#include <cstdint>

#include "shiftmc/errors.hpp"

namespace shiftmc {

// xorshift64* with a fixed scrambled seeding rule. Every uniform is built
// from the top 53 bits of the output, so the stream is bit-identical on any
// platform with IEEE-754 doubles.

struct GeneratorState {
  std::uint64_t state = 0;
};

inline constexpr std::uint64_t kSeedScramble = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kOutputMultiplier = 0x2545F4914F6CDD1Dull;

/// Any 64-bit seed is accepted; the scramble keeps the all-zeros state
/// (the recurrence's fixed point) unreachable.
inline GeneratorState seed_generator(std::uint64_t seed) noexcept {
  std::uint64_t s = seed ^ kSeedScramble;
  if (s == 0) s = kSeedScramble;
  return GeneratorState{s};
}

struct UniformDraw {
  double value;          // in [0, 1); 1.0 is unreachable
  GeneratorState next;
};

inline UniformDraw next_uniform(GeneratorState g) {
  if (g.state == 0) {
    throw ContractViolation("next_uniform: zero generator state");
  }
  std::uint64_t s = g.state;
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  const std::uint64_t out = s * kOutputMultiplier;
  return UniformDraw{static_cast<double>(out >> 11) * 0x1.0p-53, GeneratorState{s}};
}

}  // namespace shiftmc

#endif  // SHIFTMC_RNG_HPP
