#include "loxo/stability.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace loxo {

double min_contraction_R(double kmod) {
    const double sk = std::sqrt(kmod);
    return (sk + 1.0) * (sk + 1.0) / (sk * (kmod - 1.0));
}

double contraction_constant_K(const MoebiusMap& g, const LoxodromicData& data, double R) {
    if (std::abs(g.c) <= kDetTol) fail(ErrorCode::LinearMap, "contraction bound needs c != 0");
    const double ak = data.abs_k();
    if (!(R > min_contraction_R(ak))) {
        std::ostringstream msg;
        msg << "R = " << R << " <= " << min_contraction_R(ak);
        fail(ErrorCode::RTooSmall, msg.str());
    }
    const Cx pole = g.pole();

    // sup of |g'| over B_R = 1/(|c| dist(B_R, pole))^2, with the distance from
    // the Euclidean circle of C(R). R > min_contraction_R keeps the pole off B_R.
    double dist;
    if (std::abs(R - 1.0) <= 1e-12) {
        const Cx mid = 0.5 * (data.alpha + data.beta);
        const Cx u = (data.alpha - data.beta) / std::abs(data.alpha - data.beta);
        dist = -((pole - mid) * std::conj(u)).real();  // pole sits on the beta side
    } else {
        const CircleGeom circle = apollonius_circle(data, R);
        dist = std::abs(std::abs(pole - circle.center) - circle.radius);
        const bool pole_inside_disk = std::abs(pole - circle.center) < circle.radius;
        const bool region_is_disk = R > 1.0;  // B_R is the disk around alpha for R > 1
        if (pole_inside_disk == region_is_disk) {
            fail(ErrorCode::RTooSmall, "pole landed inside B_R");
        }
    }
    if (!(dist > 0.0)) fail(ErrorCode::RTooSmall, "pole touches B_R");
    const double K = 1.0 / std::norm(g.c * dist);
    if (!(K < 1.0)) fail(ErrorCode::RTooSmall, "sup |g'| on B_R reached 1");
    return K;
}

double hyers_ulam_contraction_bound(double K, double eps, int n, double d0) {
    const double Kn = std::pow(K, n);
    return Kn * d0 + (1.0 - Kn) / (1.0 - K) * eps;
}

EscapeTimeBound escape_time_bound(double kmod, double delta0) {
    if (!(kmod > 1.0)) fail(ErrorCode::InvalidConfig, "needs |k| > 1");
    if (!(delta0 > 0.0)) fail(ErrorCode::InvalidConfig, "delta0 must be positive");
    const double sk = std::sqrt(kmod);
    const double lk = std::log(kmod);

    EscapeTimeBound out;
    out.raw = std::log((2.0 * min_contraction_R(kmod) + 1.0) / delta0 + 1.0) / lk;
    out.n = std::max(1, static_cast<int>(std::floor(out.raw)) + 1);
    const double cube = std::pow((sk + 1.0) / (sk - 1.0), 3.0);
    const double raw_suf = std::log(cube / delta0 + 1.0) / lk;
    out.n_sufficient = std::max(1, static_cast<int>(std::floor(raw_suf)) + 1);
    if (out.n > out.n_sufficient) {
        fail(ErrorCode::InvalidConfig, "sufficient escape bound fell below the sharp one");
    }
    return out;
}

namespace {

// (M^n - 1)/(M - 1), capped so downstream reports stay finite. The cap is far
// above any orbit scale, so a capped value is still a valid bound.
double geometric_sum(double M, int n) {
    if (n <= 0) return 0.0;
    if (std::abs(M - 1.0) <= 1e-12) return static_cast<double>(n);
    const double cap = std::numeric_limits<double>::max() / 4.0;
    if (M > 1.0 && n * std::log(M) > 700.0) return cap;
    const double v = (std::pow(M, n) - 1.0) / (M - 1.0);
    return std::min(v, cap);
}

}  // namespace

double finite_time_bound(double M, double eps, int n) {
    if (!(M > 0.0)) fail(ErrorCode::InvalidConfig, "expansion constant must be positive");
    return geometric_sum(M, n) * eps;
}

double combined_bound(const StabilityConstants& cst, int n, bool start_in_BR) {
    if (start_in_BR) return hyers_ulam_contraction_bound(cst.K, cst.epsilon, n, 0.0);
    if (n <= cst.N) return finite_time_bound(cst.M, cst.epsilon, n);
    return finite_time_bound(cst.M, cst.epsilon, cst.N) +
           (1.0 - std::pow(cst.K, n - cst.N)) / (1.0 - cst.K) * cst.epsilon;
}

double h_of_epsilon(const StabilityConstants& cst) {
    return finite_time_bound(cst.M, cst.epsilon, cst.N) + cst.epsilon / (1.0 - cst.K);
}

StabilityConstants make_constants(const MoebiusMap& g, const LoxodromicData& data,
                                  double delta0, double t, double R, double epsilon) {
    const double ak = data.abs_k();
    StabilityConstants cst;
    cst.delta0 = delta0;
    cst.delta = t * delta0 / (ak - 1.0);
    cst.R = R;
    cst.epsilon = epsilon;
    cst.K = contraction_constant_K(g, data, R);
    const double ak1 = std::abs(data.k - 1.0);
    cst.M = 8.0 * ak1 * ak1 / (cst.delta * cst.delta * ak * ak * ak);
    cst.N = escape_time_bound(ak, delta0).n;
    cst.h_of_eps = h_of_epsilon(cst);
    return cst;
}

bool TransitRegion::contains(ExtendedComplex z) const {
    if (z.is_inf()) return false;
    const Cx den = z.value() - avoided.data.alpha;
    if (std::abs(den) < kPoleThreshold) return false;
    const Cx w = (z.value() - avoided.data.beta) / den;
    return std::abs(w) < R && !contains_f(avoided.base, w);
}

bool TransitRegion::closure_contains(ExtendedComplex z) const {
    if (z.is_inf()) return false;
    const Cx den = z.value() - avoided.data.alpha;
    if (std::abs(den) < kPoleThreshold) return false;
    const Cx w = (z.value() - avoided.data.beta) / den;
    return std::abs(w) <= R && !contains_f(avoided.base, w);
}

TransitRegion make_transit_region(double R, AvoidedRegionG avoided) {
    if (!(R > 0.0)) fail(ErrorCode::InvalidConfig, "R must be positive");
    return {R, std::move(avoided)};
}

double br_invariance_margin(const LoxodromicData& data, double R) {
    return dist_circle_to_b_region(data, R, data.abs_k() * R);
}

EscapeObservation empirical_escape_time(const MoebiusMap& g, const LoxodromicData& data,
                                        const TransitRegion& region,
                                        std::span<const Cx> starts,
                                        const PerturbationSpec& spec, int horizon) {
    const ConjugatorH h(data);
    EscapeObservation obs;
    std::uint64_t index = 0;
    for (Cx z0 : starts) {
        PerturbationSpec trial = spec;
        trial.seed = Rng::derive(spec.seed, index++).next_u64();
        const OrbitTrace trace = perturbed_orbit(g, ExtendedComplex::finite(z0),
                                                 horizon, trial, &region.avoided);

        int last_inside = -1;
        for (int n = 0; n <= horizon; ++n) {
            if (region.closure_contains(trace.a[static_cast<std::size_t>(n)])) last_inside = n;
        }
        if (last_inside >= horizon) {
            std::ostringstream msg;
            msg << "orbit from " << z0 << " still inside after " << horizon << " steps";
            fail(ErrorCode::NoEscape, msg.str());
        }
        obs.max_escape_step = std::max(obs.max_escape_step, last_inside + 1);

        // Conjugated per-step noise while the premise (orbit in the closure) holds.
        for (int n = 0; n <= last_inside && n < horizon; ++n) {
            const ExtendedComplex& an = trace.a[static_cast<std::size_t>(n)];
            const ExtendedComplex& an1 = trace.a[static_cast<std::size_t>(n) + 1];
            if (an.is_finite() && an1.is_finite()) {
                const ExtendedComplex wn = h.map(an);
                const ExtendedComplex wn1 = h.map(an1);
                if (wn.is_finite() && wn1.is_finite()) {
                    obs.max_w_noise = std::max(
                        obs.max_w_noise, std::abs(wn1.value() - data.k * wn.value()));
                }
            }
        }
    }
    return obs;
}

}  // namespace loxo
