#pragma once

#include <cstdint>

namespace pairstab {

/// splitmix64: the 64-bit splittable PRNG used for every randomized choice
/// in this library. Fixed algorithm, so identical seeds produce identical
/// streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream; used to derive per-sample seeds so that
    /// sample i is reproducible regardless of evaluation order.
    SplitMix64 split(uint64_t index) {
        SplitMix64 mix(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }

    /// Uniform in [lo, hi], inclusive. Modulo reduction; the tiny bias is
    /// irrelevant here (determinism is what matters, not uniformity).
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Uniform in [-bound, bound] \ {0}.
    long long nonzero(long long bound) {
        long long v = uniform(1, 2 * bound);
        return v <= bound ? v - bound - 1 : v - bound;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    uint64_t state_;
};

}  // namespace pairstab
