#pragma once

#include <cstdint>
#include <string_view>

namespace grcf {

/// Counter-based 64-bit generator (splitmix64 output function applied to
/// seed + counter * golden gamma). Stateless per draw: draw(i) depends
/// only on (seed, i), so streams are reproducible across languages and
/// trivially shardable.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kMix1 = 0xBF58476D1E4357B9ull;
  static constexpr std::uint64_t kMix2 = 0x94D049BB133111EBull;
  static constexpr std::string_view kAlgorithmId = "splitmix64_counter_v1";

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t draw(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * kGamma;
    z = (z ^ (z >> 30)) * kMix1;
    z = (z ^ (z >> 27)) * kMix2;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace grcf
