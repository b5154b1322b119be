#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace ia {

/// Mixes a base seed with a stream tag (splitmix64 finalizer), so that
/// different consumers of the same run seed draw from unrelated sequences.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic random source. All draws are derived from the raw mt19937_64
/// output with fixed arithmetic, so a given seed produces the same sequence on
/// every platform (std::*_distribution makes no such guarantee).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform on [-half_width, half_width).
    double symmetric(double half_width) { return uniform(-half_width, half_width); }

    /// Uniform integer in {0, ..., n-1}; unbiased via masked rejection.
    int uniform_int(int n) {
        assert(n > 0);
        const auto bound = static_cast<std::uint64_t>(n);
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t v = engine_() & mask;
            if (v < bound) return static_cast<int>(v);
        }
    }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair() {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ia
