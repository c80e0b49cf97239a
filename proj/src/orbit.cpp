#include "loxo/orbit.hpp"

#include <limits>
#include <sstream>

namespace loxo {

std::vector<ExtendedComplex> exact_orbit(const MoebiusMap& g, ExtendedComplex z0, int steps) {
    std::vector<ExtendedComplex> orbit;
    orbit.reserve(static_cast<std::size_t>(steps) + 1);
    orbit.push_back(z0);
    for (int n = 0; n < steps; ++n) orbit.push_back(apply(g, orbit.back()));
    return orbit;
}

namespace {

Cx adversarial_direction(Cx from, const AvoidedRegionG& target) {
    Cx nearest = target.data.beta;  // central blob of the avoided region
    double best = std::abs(from - nearest);
    for (Cx c : target.disk_centers_z()) {
        const double d = std::abs(from - c);
        if (d < best) {
            best = d;
            nearest = c;
        }
    }
    if (best < kPoleThreshold) return {1.0, 0.0};
    return (nearest - from) / best;
}

double deviation_of(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_inf() || b.is_inf()) {
        return (a == b) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(a.value() - b.value());
}

}  // namespace

OrbitTrace perturbed_orbit(const MoebiusMap& g, ExtendedComplex z0, int steps,
                           const PerturbationSpec& spec, const AvoidedRegionG* target) {
    if (spec.epsilon < 0.0) fail(ErrorCode::InvalidConfig, "epsilon must be >= 0");
    if (spec.kind == NoiseKind::Adversarial && target == nullptr) {
        fail(ErrorCode::InvalidConfig, "adversarial noise needs an avoided region");
    }

    const bool has_pole = std::abs(g.c) > kDetTol;
    const Cx pole = has_pole ? g.pole() : Cx{};

    OrbitTrace trace;
    trace.a.reserve(static_cast<std::size_t>(steps) + 1);
    trace.b.reserve(static_cast<std::size_t>(steps) + 1);
    trace.noise.reserve(static_cast<std::size_t>(steps));
    trace.deviations.reserve(static_cast<std::size_t>(steps) + 1);
    trace.a.push_back(z0);
    trace.b.push_back(z0);
    trace.deviations.push_back(0.0);

    Rng rng(spec.seed);
    for (int n = 0; n < steps; ++n) {
        const ExtendedComplex an = trace.a.back();
        if (has_pole && an.is_finite() && std::abs(an.value() - pole) < 1e-12) {
            std::ostringstream msg;
            msg << "a_" << n << " = " << an.value() << " within 1e-12 of the pole";
            fail(ErrorCode::OrbitHitPole, msg.str());
        }
        const ExtendedComplex ga = apply(g, an);
        if (ga.is_inf()) {
            std::ostringstream msg;
            msg << "a_" << n << " mapped to infinity";
            fail(ErrorCode::OrbitHitPole, msg.str());
        }

        Cx eta{0.0, 0.0};
        if (spec.epsilon > 0.0) {
            switch (spec.kind) {
                case NoiseKind::UniformDisk: eta = rng.in_disk(spec.epsilon); break;
                case NoiseKind::Boundary: eta = rng.on_circle(spec.epsilon); break;
                case NoiseKind::Adversarial:
                    eta = Rng::clamp_to_disk(
                        spec.epsilon * adversarial_direction(ga.value(), *target),
                        spec.epsilon);
                    break;
            }
        }
        trace.noise.push_back(eta);
        trace.a.push_back(ExtendedComplex::finite(ga.value() + eta));
        trace.b.push_back(apply(g, trace.b.back()));
        trace.deviations.push_back(deviation_of(trace.a.back(), trace.b.back()));
    }
    return trace;
}

}  // namespace loxo
