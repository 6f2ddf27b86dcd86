#pragma once

#include <cstdint>

namespace nsring {

// splitmix64. The standard <random> engines are portable but the
// distributions are not; sweeps must be byte-reproducible across
// compilers, so we roll the whole generator.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform over [lo, hi], inclusive
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % span;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % span);
  }

private:
  uint64_t state_;
};

} // namespace nsring
