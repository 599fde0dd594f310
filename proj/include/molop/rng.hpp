#pragma once

#include <cstdint>
#include <random>

namespace molop {

/// Seeded mt19937_64 with a uniform-double helper that avoids
/// std::uniform_real_distribution (whose output is not pinned across
/// standard library implementations). Identical seeds give identical
/// sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace molop
