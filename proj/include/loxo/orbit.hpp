#pragma once

#include <cstdint>
#include <vector>

#include "loxo/avoided.hpp"
#include "loxo/rng.hpp"

namespace loxo {

enum class NoiseKind {
    UniformDisk,  // uniform over the closed eps-disk
    Boundary,     // modulus exactly eps, uniform angle
    Adversarial,  // modulus eps, aimed at the nearest avoided-region center
};

struct PerturbationSpec {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    NoiseKind kind = NoiseKind::UniformDisk;
};

// Paired perturbed/exact orbit with per-step records.
//   a_{n+1} = g(a_n) + noise_n,  |noise_n| <= epsilon
//   b_{n+1} = g(b_n),            b_0 = a_0
// deviations[n] = |a_n - b_n|; bounds are filled by the stability layer.
struct OrbitTrace {
    std::vector<ExtendedComplex> a;
    std::vector<ExtendedComplex> b;
    std::vector<Cx> noise;           // noise[n] applied between step n and n+1
    std::vector<double> deviations;  // |a_n - b_n|
    std::vector<double> bounds;      // optional, same length as deviations when set
};

// length steps+1; total on the sphere.
std::vector<ExtendedComplex> exact_orbit(const MoebiusMap& g, ExtendedComplex z0, int steps);

// Deterministic for a given spec.seed. Throws OrbitHitPole when an iterate
// lands within 1e-12 of -d/c (the next exact step would leave the plane).
// Adversarial noise needs `target` for the avoided-region centers; other kinds
// ignore it.
OrbitTrace perturbed_orbit(const MoebiusMap& g, ExtendedComplex z0, int steps,
                           const PerturbationSpec& spec,
                           const AvoidedRegionG* target = nullptr);

}  // namespace loxo
