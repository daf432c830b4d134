#pragma once

#include <cstdint>
#include <random>

namespace swinglat {

// Seeded generator with platform-independent draws. The standard
// distributions are implementation-defined, which would break golden replays.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return draw % bound;
    }

    /// Uniform in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    bool operator==(const Rng&) const = default;

private:
    std::mt19937_64 engine_;
};

} // namespace swinglat
