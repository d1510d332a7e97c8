#pragma once

#include <cmath>
#include <cstdint>

namespace eqm {

/// SplitMix64 (Steele, Lea, Flood). Used in counter mode: the stream for item
/// i of a corpus with seed s starts from mix64(s * kGolden + i), so any item can
/// be regenerated on its own and ports in other languages reproduce the corpus.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 for_item(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed * kGolden + index));
  }

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard exponential variate.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::uint64_t state_;
};

}  // namespace eqm
