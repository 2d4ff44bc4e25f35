#pragma once

#include <cstdint>

namespace gnorm {

// SplitMix64 (Steele, Lea, Flood). Stable across platforms, so seeds written
// into run manifests reproduce byte-identical results anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) from the top 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [-1,1).
  double uniform_signed() { return 2.0 * uniform() - 1.0; }

  // Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Independent substream: stream i of seed s starts from the SplitMix64
  // finalizer state s + (i+1)*golden.  Used to make per-trial draws
  // independent of worker scheduling.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

 private:
  std::uint64_t state_;
};

}  // namespace gnorm
