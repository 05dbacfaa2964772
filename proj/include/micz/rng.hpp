#pragma once

#include <cstdint>
#include <random>

#include "micz/linalg.hpp"

namespace micz {

// std::mt19937_64 output is pinned by the standard; the std distributions are
// not, so doubles are extracted from the raw bits here to keep reports
// byte-reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double unit()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    bool coin() { return (engine_() & 1u) != 0; }

    Vec3 uniform_vec3(double lo, double hi)
    {
        const double a = uniform(lo, hi);
        const double b = uniform(lo, hi);
        const double c = uniform(lo, hi);
        return {a, b, c};
    }

    /// Uniform direction on the unit sphere (Marsaglia rejection).
    Vec3 unit_vec3()
    {
        for (;;) {
            const double a = uniform(-1.0, 1.0);
            const double b = uniform(-1.0, 1.0);
            const double s = a * a + b * b;
            if (s >= 1.0 || s == 0.0)
                continue;
            const double f = 2.0 * std::sqrt(1.0 - s);
            return {a * f, b * f, 1.0 - 2.0 * s};
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace micz
