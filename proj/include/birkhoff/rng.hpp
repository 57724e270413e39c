// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_RNG_HPP
#define BIRKHOFF_RNG_HPP

#include <cstdint>

namespace birkhoff {

/// splitmix64 generator. Used instead of <random> distributions so that
/// seeded output is identical across standard library implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

}  // namespace birkhoff

#endif
