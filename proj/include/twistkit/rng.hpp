#pragma once
#include <cstdint>

namespace tk {

/* SplitMix64 (Steele, Lea, Flood 2014). Deterministic across platforms,
   splittable: split() forks an independent stream. */
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  Rng split() { return Rng(next() ^ 0x5851F42D4C957F2Dull); }

  // uniform in [0, n), n > 0; rejection keeps it unbiased
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = next(); } while (v >= lim);
    return v % n;
  }

  long range(long lo, long hi) { // inclusive ends
    return lo + (long)below((std::uint64_t)(hi - lo + 1));
  }
};

} // namespace tk
