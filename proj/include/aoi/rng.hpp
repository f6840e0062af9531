#pragma once

#include <cstdint>

namespace aoi {

// splitmix64. Every random decision in the library (interleaving draws and
// the instance generator) comes from this stream so that traces are
// reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi]; floor(unit() * width), not rejection sampled.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const double width = static_cast<double>(hi - lo + 1);
    auto k = static_cast<std::int64_t>(unit() * width);
    if (k > hi - lo) k = hi - lo;
    return lo + k;
  }

 private:
  std::uint64_t state_;
};

}  // namespace aoi
