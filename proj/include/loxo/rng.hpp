#pragma once

#include <cstdint>

#include "loxo/complex_ext.hpp"

namespace loxo {

// Deterministic splitmix64 generator. Small state, full reproducibility for a
// given seed; all simulation randomness in this project flows through it so
// traces and reports are byte-identical across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    Cx in_box(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

    // Uniform over the disk of radius `radius`. The radius is kept a hair
    // inside the nominal value so exact-inequality bound checks downstream are
    // immune to last-ulp rounding of the orbit arithmetic.
    Cx in_disk(double radius) {
        const double u = unit() * (1.0 - 1e-9);
        const double r = radius * std::sqrt(u);
        const double theta = 6.283185307179586476925286766559 * unit();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    // A point of modulus `radius` (up to rounding, clamped to never exceed it).
    Cx on_circle(double radius) {
        const double theta = 6.283185307179586476925286766559 * unit();
        return clamp_to_disk({radius * std::cos(theta), radius * std::sin(theta)}, radius);
    }

    // Child generator for trial `index`; independent streams from one master seed.
    static Rng derive(std::uint64_t master, std::uint64_t index) {
        Rng mix(master ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    // Rescales z onto the closed disk of radius `radius` when rounding pushed it out.
    static Cx clamp_to_disk(Cx z, double radius) {
        double m = std::abs(z);
        if (m <= radius || m == 0.0) return z;
        Cx s = z * (radius / m);
        while (std::abs(s) > radius) s *= (1.0 - 1e-16);
        return s;
    }

private:
    std::uint64_t state_;
};

}  // namespace loxo
