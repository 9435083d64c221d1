#pragma once

#include <cstdint>

namespace vck {

// splitmix64. Every random draw in the library goes through this generator,
// so a given seed yields bit-identical output on any platform. The standard
// <random> distributions are implementation-defined and are not used.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in {0, ..., n-1}; n must be positive
    uint64_t next_below(uint64_t n) { return next() % n; }
};

// Independent deterministic stream for (seed, stream index) pairs; used to
// hand each restart / trial its own generator.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    Rng r(seed ^ (0xA24BAED4963EE407ull * (stream + 1)));
    return r.next();
}

} // namespace vck
