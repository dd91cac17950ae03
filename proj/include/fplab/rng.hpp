#pragma once

#include <cstdint>

namespace fplab {

// splitmix64: fully specified, so seeded experiments reproduce bit-for-bit on
// any platform (std::uniform_int_distribution would not).
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n >= 1.
  uint64_t below(uint64_t n) {
    const uint64_t limit = n * (UINT64_MAX / n);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

private:
  uint64_t state_;
};

// Per-trial seed: a pure function of (master, cell, trial), so results are
// independent of execution order and parallelism.
inline uint64_t mix_seed(uint64_t master, uint64_t cell, uint64_t trial) {
  uint64_t z = master ^ (0x9e3779b97f4a7c15ull * (cell + 1)) ^
               (0xc2b2ae3d27d4eb4full * (trial + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace fplab
