#pragma once

#include <cstdint>

#include "fanok3/rat.hpp"

namespace fanok3 {

// splitmix64: tiny deterministic generator, stable across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + long(next() % uint64_t(hi - lo + 1));
    }
    // positive rational with numerator and denominator uniform in [1, 50]
    Rat rational() { return rat(range(1, 50), range(1, 50)); }

  private:
    uint64_t state_;
};

}  // namespace fanok3
