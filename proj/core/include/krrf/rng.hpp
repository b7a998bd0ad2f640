#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace krrf {

/// Seeded random source. Every random decision in the library flows through
/// an explicitly passed Rng, so a whole planning run is reproducible from a
/// single seed. The raw engine output is mapped to doubles by hand to keep
/// the stream independent of standard-library distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform in (0, hi].
    double uniform_pos(double hi) { return hi * (1.0 - uniform01()); }

    /// Uniform angle in (-pi, pi].
    double uniform_angle() { return std::numbers::pi * (1.0 - 2.0 * uniform01()); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    uint64_t uniform_index(uint64_t n) {
        const uint64_t limit =
            std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
        uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace krrf
