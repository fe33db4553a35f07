#pragma once

#include <cstdint>

namespace skewgoppa {

/// Counter-based deterministic random stream.  The value at counter i is
/// splitmix64(seed + i * 0x9E3779B97F4A7C15); identical (seed, i) pairs give
/// identical values in any implementation, so instance streams can be
/// reproduced outside this library.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed, uint64_t counter = 0) : seed_(seed), counter_(counter) {}

    static uint64_t at(uint64_t seed, uint64_t counter) {
        uint64_t z = seed + counter * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t next() { return at(seed_, counter_++); }

    /// Uniform value in [0, bound) by rejection-free modulo; bound > 0.
    /// The slight modulo bias is irrelevant for test-instance sampling and
    /// keeps the stream trivially reproducible.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    uint64_t counter() const { return counter_; }
    uint64_t seed() const { return seed_; }

  private:
    uint64_t seed_;
    uint64_t counter_;
};

} // namespace skewgoppa
