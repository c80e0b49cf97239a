#include "loxo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "loxo/avoided.hpp"

namespace loxo {

namespace {

Cx polar_cx(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

constexpr double kTau = 6.283185307179586476925286766559;

// Smallest slack of a point lying outside the avoided region (negative inside).
double exterior_slack_f(const AvoidedRegionF& region, Cx w) {
    double slack = std::abs(w) - region.outer_radius;
    for (Cx c : region.disk_centers()) {
        slack = std::min(slack, std::abs(w - c) - region.delta);
    }
    return slack;
}

double interior_slack_f(const AvoidedRegionF& region, Cx w) {
    double slack = region.outer_radius - std::abs(w);
    for (Cx c : region.disk_centers()) {
        slack = std::max(slack, region.delta - std::abs(w - c));
    }
    return slack;
}

std::string fmt_margin(double m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace

Cx sample_br_point(Rng& rng, const LoxodromicData& data, double R) {
    const ConjugatorH h(data);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double m = R * (1.0 + 1e-9 + 2.0 * rng.unit());
        const Cx w = polar_cx(m, kTau * rng.unit());
        if (std::abs(w - 1.0) < 0.05 * std::min(1.0, R)) continue;  // keep pullback desk-scale
        return h.inv_finite(w);
    }
    fail(ErrorCode::InvalidConfig, "could not sample a point of B_R");
}

Cx sample_transit_w(Rng& rng, double R, const AvoidedRegionF& avoided) {
    if (!(avoided.outer_radius < R)) {
        fail(ErrorCode::InvalidConfig, "avoided region swallows the transit annulus");
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double m = avoided.outer_radius +
                         (R - avoided.outer_radius) * (1e-9 + (1.0 - 2e-9) * rng.unit());
        const Cx w = polar_cx(m, kTau * rng.unit());
        if (contains_f_safe(avoided, w, 1e-9)) continue;
        if (std::abs(w - 1.0) < 1e-3) continue;  // pullback pole
        return w;
    }
    fail(ErrorCode::InvalidConfig, "could not sample the transit annulus");
}

Cx sample_transit_point(Rng& rng, const TransitRegion& region) {
    const ConjugatorH h(region.avoided.data);
    return h.inv_finite(sample_transit_w(rng, region.R, region.avoided.base));
}

MoebiusMap random_loxodromic_map(Rng& rng, bool tame) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Cx a = rng.in_box(-2.0, 2.0);
        const Cx b = rng.in_box(-2.0, 2.0);
        const Cx c = rng.in_box(-2.0, 2.0);
        const Cx d = rng.in_box(-2.0, 2.0);
        if (std::abs(a * d - b * c) < 0.1) continue;
        const MoebiusMap g = normalize(a, b, c, d);
        if (std::abs(g.c) < 0.05) continue;
        const Cx tr = g.trace();
        if (std::abs(tr.imag()) <= 1e-6 && std::abs(tr.real()) <= 2.0 + 1e-6) continue;
        if (tame) {
            const LoxodromicData data = fixed_points(g);
            if (data.abs_k() < 1.1 || data.abs_k() > 25.0) continue;
        }
        return g;
    }
    fail(ErrorCode::InvalidConfig, "random map generation stalled");
}

namespace {

using Suite = SuiteResult (*)();

SuiteResult suite_fixed_points(const MoebiusMap& g, const LoxodromicData& data) {
    const double tol = 1e-9;
    const auto resid = [&](Cx p) {
        const ExtendedComplex image = apply(g, ExtendedComplex::finite(p));
        return std::abs(image.value() - p) / (1.0 + std::abs(p));
    };
    const double worst = std::max(resid(data.alpha), resid(data.beta));
    SuiteResult r{"fixed_points", worst <= tol, tol - worst,
                  "max fixed-point residual " + fmt_margin(worst)};
    return r;
}

SuiteResult suite_algebraic_identities(const MoebiusMap& g, const LoxodromicData& data) {
    const double tol = 1e-8;
    const Cx k = data.k;
    const double r1 = std::abs(data.c_alpha_d * data.c_beta_d - 1.0);
    const Cx cab = g.c * (data.alpha - data.beta);
    const Cx rhs = (k - 1.0) * (k - 1.0) / k;
    const double r2 = std::abs(cab * cab - rhs) / (1.0 + std::abs(rhs));
    const Cx pole = g.pole();
    const double r3 =
        std::abs(pole - (k * data.beta - data.alpha) / (k - 1.0)) / (1.0 + std::abs(pole));
    const double gpa = std::abs(derivative(g, data.alpha));
    const double gpb = std::abs(derivative(g, data.beta));
    const double worst = std::max({r1, r2, r3});
    const double order_margin = std::min(1.0 - gpa, gpb - 1.0);
    SuiteResult r{"algebraic_identities",
                  worst <= tol && order_margin > 0.0,
                  std::min(tol - worst, order_margin),
                  "identity residual " + fmt_margin(worst) + ", |g'(alpha)| = " +
                      fmt_margin(gpa) + ", |g'(beta)| = " + fmt_margin(gpb)};
    return r;
}

SuiteResult suite_conjugation(const MoebiusMap& g, const LoxodromicData& data, Rng rng) {
    const double tol = 1e-8;
    const ConjugatorH h(data);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Cx w = rng.in_box(-5.0, 5.0);
        if (std::abs(w - 1.0) < 1e-3) continue;
        const ExtendedComplex z = h.inv(ExtendedComplex::finite(w));
        const ExtendedComplex gz = apply(g, z);
        const ExtendedComplex back = h.map(gz);
        if (back.is_inf()) {
            return {"conjugation", false, -1.0, "conjugated point escaped to infinity"};
        }
        const Cx kw = data.k * w;
        worst = std::max(worst, std::abs(back.value() - kw) / (1.0 + std::abs(kw)));
    }
    return {"conjugation", worst <= tol, tol - worst,
            "sup |h(g(h^-1(w))) - k w| (relative) = " + fmt_margin(worst)};
}

SuiteResult suite_region_geometry(const MoebiusMap& g, const LoxodromicData& data, Rng rng) {
    const double tol = 1e-8;
    const double ak = data.abs_k();
    const ConjugatorH h(data);
    const Cx pole = g.pole();
    double worst = 0.0;
    std::ostringstream detail;

    for (double r : {1.0 / std::sqrt(ak), 0.5, 1.0, 2.0}) {
        if (std::abs(r * r - ak) <= 1e-6 * std::max(1.0, ak)) continue;  // line case
        const CircleOrLine image = h_boundary_circle_of_S(data, g, r);
        for (int j = 0; j < 360; ++j) {
            const Cx z = pole + polar_cx(r / std::abs(g.c), kTau * j / 360.0);
            const Cx w = h.map_finite(z);
            const double resid =
                std::abs(std::abs(w - image.circle.center) - image.circle.radius) /
                image.circle.radius;
            worst = std::max(worst, resid);
        }
    }
    // Circle through the origin: |center| equals the radius at r = 1/sqrt|k|.
    const CircleOrLine origin_circle = h_boundary_circle_of_S(data, g, 1.0 / std::sqrt(ak));
    if (!origin_circle.is_line) {
        worst = std::max(worst,
                         std::abs(std::abs(origin_circle.circle.center) -
                                  origin_circle.circle.radius) /
                             origin_circle.circle.radius);
    }
    const double rho = hS1_outer_bound(data);  // throws if the sandwich fails
    detail << "outer bound " << rho << ", max circle residual " << worst;

    // |g'(z)| < 1 exactly on S(1).
    int mismatches = 0;
    const double s1 = 1.0 / std::abs(g.c);
    for (int i = 0; i < 2000; ++i) {
        const Cx z = pole + rng.in_box(-4.0 * s1, 4.0 * s1);
        const double gap = std::abs(z - pole) - s1;
        if (std::abs(gap) <= 1e-9 * (1.0 + s1)) continue;
        const bool contracting = std::abs(derivative(g, z)) < 1.0;
        if (contracting != (gap > 0.0)) ++mismatches;
    }
    if (mismatches > 0) {
        detail << ", " << mismatches << " S(1) mismatches";
        return {"region_geometry", false, -1.0, detail.str()};
    }
    return {"region_geometry", worst <= tol, tol - worst, detail.str()};
}

SuiteResult suite_b_invariance(const MoebiusMap& g, const LoxodromicData& data, Rng rng) {
    const double ak = data.abs_k();
    const ConjugatorH h(data);
    double w_margin = 1e300;
    double z_margin = 1e300;
    for (double r : {0.25, 1.0, 4.0}) {
        for (int i = 0; i < 1000; ++i) {
            const double m = r * (1.0 + 1e-9 + 3.0 * rng.unit());
            const Cx w = polar_cx(m, kTau * rng.unit());
            if (std::abs(w - 1.0) < 1e-3 * (1.0 + r)) continue;
            const Cx z = h.inv_finite(w);
            // Membership transport h(B(r)) = D(r).
            if ((std::abs(h.map_finite(z)) >= r) != (std::abs(z - data.beta) >=
                                                     r * std::abs(z - data.alpha))) {
                return {"b_invariance", false, -1.0, "membership transport mismatch"};
            }
            const ExtendedComplex gz = apply(g, ExtendedComplex::finite(z));
            if (gz.is_inf()) return {"b_invariance", false, -1.0, "sample hit the pole"};
            w_margin = std::min(w_margin, std::abs(h.map_finite(gz.value())) - ak * r);
            // Direct z-side inequality for g(B(r)) inside B(|k| r).
            const double lhs = std::abs(gz.value() - data.beta);
            const double rhs = ak * r * std::abs(gz.value() - data.alpha);
            z_margin = std::min(z_margin, (lhs - rhs) / (1.0 + lhs));
        }
    }
    const double margin = std::min(w_margin, z_margin);
    return {"b_invariance", margin >= -1e-12, margin,
            "min slack of g(B(r)) inside B(|k| r): " + fmt_margin(margin)};
}

SuiteResult suite_avoided_invariance(const MoebiusMap& g, const LoxodromicData& data,
                                     const AvoidedRegionG& region, Rng rng) {
    const AvoidedRegionF& f = region.base;
    const Cx k = data.k;
    const ConjugatorH h(data);
    const double L = std::max(2.0, 3.0 * f.outer_radius);
    double margin = 1e300;

    // One-step statement in w-coordinates, exact inequality.
    std::vector<Cx> inv_pows(22);  // inv_pows[j] = k^{-(j-1)}, j = 0 -> k
    inv_pows[0] = k;
    inv_pows[1] = Cx{1.0, 0.0};
    for (int j = 2; j < 22; ++j) inv_pows[j] = inv_pows[j - 1] / k;
    for (int i = 0; i < 10000; ++i) {
        const int m = static_cast<int>(rng.next_u64() % 21);
        Cx cj;
        do {
            cj = rng.in_box(-L, L);
        } while (!(std::abs(cj - inv_pows[m + 1]) > f.delta));
        const Cx eta = rng.in_disk(f.delta0);
        const double lhs = std::abs(k * cj + eta - inv_pows[m]);
        if (!(lhs > f.delta)) {
            return {"avoided_invariance", false, f.delta - lhs, "one-step slack violated"};
        }
        margin = std::min(margin, lhs - f.delta);
    }

    // Complement invariance under the dilation and under g.
    for (int i = 0; i < 10000; ++i) {
        const Cx w = rng.in_box(-L, L);
        if (contains_f(f, w)) continue;
        if (contains_f(f, k * w)) {
            return {"avoided_invariance", false, -1.0, "dilation re-entered the region"};
        }
        margin = std::min(margin, exterior_slack_f(f, k * w));
    }
    const Cx mid = 0.5 * (data.alpha + data.beta);
    const double span = 1.5 * std::abs(data.alpha - data.beta);
    for (int i = 0; i < 10000; ++i) {
        const Cx z = mid + rng.in_box(-span, span);
        if (contains_g(region, ExtendedComplex::finite(z))) continue;
        const ExtendedComplex gz = apply(g, ExtendedComplex::finite(z));
        if (contains_g(region, gz)) {
            return {"avoided_invariance", false, -1.0, "g re-entered the region"};
        }
        if (gz.is_finite() && std::abs(gz.value() - data.alpha) > kPoleThreshold) {
            margin = std::min(margin, exterior_slack_f(f, h.map_finite(gz.value())));
        }
    }

    // Backward orbit of infinity sits inside, via the map and via h^{-1}.
    const MoebiusMap ginv = inverse(g);
    ExtendedComplex z = ExtendedComplex::infinity();
    Cx wpow{1.0, 0.0};
    for (int n = 1; n <= f.n_disks + 5; ++n) {
        z = apply(ginv, z);
        wpow /= k;
        if (!contains_g(region, z)) {
            return {"avoided_invariance", false, -1.0,
                    "backward orbit point " + std::to_string(n) + " escaped"};
        }
        if (z.is_finite()) {
            const Cx via_h = h.inv_finite(wpow);
            const double agree = std::abs(z.value() - via_h) / (1.0 + std::abs(via_h));
            if (agree > 1e-6) {
                return {"avoided_invariance", false, -1.0,
                        "backward orbit routes disagree at n = " + std::to_string(n)};
            }
            margin = std::min(margin, interior_slack_f(f, h.map_finite(z.value())));
        }
    }
    return {"avoided_invariance", margin > 0.0, margin,
            "min avoidance slack " + fmt_margin(margin)};
}

SuiteResult suite_trajectory_avoidance(const MoebiusMap& g, const LoxodromicData& data,
                                       const AvoidedRegionG& region, double eps_max,
                                       const RunConfig& config) {
    const ConjugatorH h(data);
    const double R = resolved_R(config, data.abs_k());
    const TransitRegion transit = make_transit_region(R, region);
    const double eps = 0.9 * eps_max;
    double margin = 1e300;
    Rng starts(Rng::derive(config.seed, 71).next_u64());
    for (int trial = 0; trial < config.trials; ++trial) {
        const Cx z0 = (trial % 2 == 0) ? sample_transit_point(starts, transit)
                                       : sample_br_point(starts, data, R);
        PerturbationSpec spec;
        spec.epsilon = eps;
        spec.seed = Rng::derive(config.seed, 7000 + static_cast<std::uint64_t>(trial)).next_u64();
        spec.kind = (trial % 4 < 2) ? NoiseKind::UniformDisk : NoiseKind::Adversarial;
        const OrbitTrace trace =
            perturbed_orbit(g, ExtendedComplex::finite(z0), config.steps, spec, &region);
        for (const ExtendedComplex& a : trace.a) {
            if (contains_g_safe(region, a)) {
                return {"trajectory_avoidance", false, -1.0,
                        "orbit entered the avoided region"};
            }
            if (a.is_finite() && std::abs(a.value() - data.alpha) > kPoleThreshold) {
                margin = std::min(margin, exterior_slack_f(region.base,
                                                           h.map_finite(a.value())));
            }
        }
    }
    return {"trajectory_avoidance", margin > 0.0, margin,
            "min orbit slack " + fmt_margin(margin) + " over " +
                std::to_string(config.trials) + " orbits"};
}

SuiteResult suite_escape_time(const MoebiusMap& g, const LoxodromicData& data,
                              const AvoidedRegionG& region, double eps_max,
                              const RunConfig& config) {
    const double ak = data.abs_k();
    const EscapeTimeBound bound = escape_time_bound(ak, config.delta0);
    const double R = resolved_R(config, ak);
    const TransitRegion transit = make_transit_region(R, region);
    std::ostringstream detail;
    detail << "N = " << bound.n << ", sufficient N = " << bound.n_sufficient;

    // Dilation-side orbits with delta0 noise.
    Rng rng(Rng::derive(config.seed, 81).next_u64());
    int worst_w = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Cx c = sample_transit_w(rng, R, region.base);
        Rng noise(Rng::derive(config.seed, 8000 + static_cast<std::uint64_t>(trial)).next_u64());
        int last_inside = -1;
        const int horizon = 10 * bound.n;
        for (int n = 0; n <= horizon; ++n) {
            if (std::abs(c) <= R && !contains_f(region.base, c)) last_inside = n;
            c = data.k * c + noise.in_disk(config.delta0);
        }
        if (last_inside >= horizon) {
            return {"escape_time", false, -1.0, "dilation orbit failed to leave"};
        }
        worst_w = std::max(worst_w, last_inside + 1);
    }
    detail << ", empirical (w) " << worst_w;

    // Conjugated orbits with epsilon chosen so the premise |w-noise| <= delta0 holds.
    const double sup_h_prime = (ak * R + 1.0) * (ak * R + 1.0) / std::abs(data.alpha - data.beta);
    const double eps = std::min(0.9 * eps_max, 0.9 * config.delta0 / sup_h_prime);
    std::vector<Cx> starts;
    for (int i = 0; i < 100; ++i) starts.push_back(sample_transit_point(rng, transit));
    PerturbationSpec spec;
    spec.epsilon = eps;
    spec.seed = Rng::derive(config.seed, 82).next_u64();
    const EscapeObservation obs =
        empirical_escape_time(g, data, transit, starts, spec, 10 * bound.n);
    detail << ", empirical (g) " << obs.max_escape_step << ", w-noise " << obs.max_w_noise;

    const bool pass = worst_w <= bound.n && obs.max_escape_step <= bound.n &&
                      obs.max_w_noise <= config.delta0 && bound.n <= bound.n_sufficient;
    const double margin = std::min(static_cast<double>(bound.n - worst_w),
                                   static_cast<double>(bound.n - obs.max_escape_step));
    return {"escape_time", pass, margin, detail.str()};
}

SuiteResult suite_contraction(const MoebiusMap& g, const LoxodromicData& data,
                              const RunConfig& config) {
    const double R = resolved_R(config, data.abs_k());
    const double K = contraction_constant_K(g, data, R);
    const double eps = resolved_epsilon(config, data, g);
    Rng rng(Rng::derive(config.seed, 91).next_u64());

    double q_margin = 1e300;
    for (int i = 0; i < 10000; ++i) {
        const Cx u = sample_br_point(rng, data, R);
        const Cx v = sample_br_point(rng, data, R);
        if (std::abs(u - v) < 1e-9) continue;
        const Cx gu = apply(g, ExtendedComplex::finite(u)).value();
        const Cx gv = apply(g, ExtendedComplex::finite(v)).value();
        const double q = std::abs(gu - gv) / std::abs(u - v);
        q_margin = std::min(q_margin, (2.0 * K - q) / (2.0 * K));
    }

    double bound_margin = 1e300;
    for (int trial = 0; trial < config.trials; ++trial) {
        const Cx z0 = sample_br_point(rng, data, R);
        PerturbationSpec spec;
        spec.epsilon = eps;
        spec.seed = Rng::derive(config.seed, 9000 + static_cast<std::uint64_t>(trial)).next_u64();
        const OrbitTrace trace = perturbed_orbit(g, ExtendedComplex::finite(z0),
                                                 config.steps, spec);
        for (int n = 1; n <= config.steps; ++n) {
            const double bound = hyers_ulam_contraction_bound(K, eps, n, 0.0);
            bound_margin = std::min(bound_margin,
                                    bound - trace.deviations[static_cast<std::size_t>(n)]);
        }
    }
    std::ostringstream detail;
    detail << "K = " << K << ", quotient margin " << q_margin << ", bound slack "
           << bound_margin << ", invariance margin " << br_invariance_margin(data, R);
    const bool pass = K < 1.0 && q_margin > 0.0 && bound_margin >= 0.0;
    return {"contraction", pass, std::min(q_margin, bound_margin), detail.str()};
}

SuiteResult suite_shadowing(const MoebiusMap& g, const LoxodromicData& data,
                            const AvoidedRegionG& region, double eps_max,
                            const RunConfig& config) {
    const double ak = data.abs_k();
    const double R = resolved_R(config, ak);
    const TransitRegion transit = make_transit_region(R, region);
    const double eps = resolved_epsilon(config, data, g);
    const StabilityConstants cst = make_constants(g, data, config.delta0, config.t, R, eps);

    Rng rng(Rng::derive(config.seed, 101).next_u64());
    double rel_margin = 1e300;
    for (int trial = 0; trial < config.trials; ++trial) {
        const bool in_br = (trial % 2 == 1);
        const Cx z0 = in_br ? sample_br_point(rng, data, R) : sample_transit_point(rng, transit);
        PerturbationSpec spec;
        spec.epsilon = eps;
        spec.seed =
            Rng::derive(config.seed, 100000 + static_cast<std::uint64_t>(trial)).next_u64();
        const OrbitTrace trace = perturbed_orbit(g, ExtendedComplex::finite(z0),
                                                 config.steps, spec, &region);
        for (int n = 1; n <= config.steps; ++n) {
            const double bound = combined_bound(cst, n, in_br);
            const double dev = trace.deviations[static_cast<std::size_t>(n)];
            if (!(dev <= bound)) {
                return {"shadowing", false, (bound - dev) / bound,
                        "deviation exceeded the bound at step " + std::to_string(n)};
            }
            rel_margin = std::min(rel_margin, (bound - dev) / bound);
        }
    }

    // H(eps) is exactly linear in eps.
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (double scale : {1e-2, 1e-3, 1e-4}) {
        StabilityConstants c2 = cst;
        c2.epsilon = scale * eps_max;
        const double ratio = h_of_epsilon(c2) / c2.epsilon;
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }
    const double spread = (ratio_hi - ratio_lo) / ratio_hi;
    std::ostringstream detail;
    detail << "H(eps) = " << cst.h_of_eps << ", min relative slack " << rel_margin
           << ", H/eps spread " << spread;
    const bool pass = rel_margin >= 0.0 && spread <= 1e-12;
    return {"shadowing", pass, rel_margin, detail.str()};
}

}  // namespace

VerifyOutcome run_verify(const MoebiusMap& g, const RunConfig& config) {
    validate_config(config);
    VerifyOutcome out;
    out.data = fixed_points(g);
    const LoxodromicData& data = out.data;

    const auto guarded = [&](const char* name, auto&& fn) {
        try {
            out.suites.push_back(fn());
        } catch (const Error& e) {
            out.suites.push_back({name, false, -1.0, e.what()});
        }
    };

    guarded("fixed_points", [&] { return suite_fixed_points(g, data); });
    guarded("algebraic_identities", [&] { return suite_algebraic_identities(g, data); });
    guarded("conjugation", [&] {
        return suite_conjugation(g, data, Rng(Rng::derive(config.seed, 31).next_u64()));
    });
    guarded("region_geometry", [&] {
        return suite_region_geometry(g, data, Rng(Rng::derive(config.seed, 41).next_u64()));
    });
    guarded("b_invariance", [&] {
        return suite_b_invariance(g, data, Rng(Rng::derive(config.seed, 51).next_u64()));
    });

    std::optional<AvoidedRegionG> region;
    std::optional<double> eps_max_value;
    try {
        region = build_avoided_g(data, config.delta0, config.t);
        eps_max_value = epsilon_max(data, g, region->base.delta);
    } catch (const Error& e) {
        out.suites.push_back({"avoided_region", false, -1.0, e.what()});
    }

    if (region && eps_max_value) {
        out.eps_max = *eps_max_value;
        guarded("avoided_invariance", [&] {
            return suite_avoided_invariance(g, data, *region,
                                            Rng(Rng::derive(config.seed, 61).next_u64()));
        });
        guarded("trajectory_avoidance", [&] {
            return suite_trajectory_avoidance(g, data, *region, *eps_max_value, config);
        });
        guarded("escape_time", [&] {
            return suite_escape_time(g, data, *region, *eps_max_value, config);
        });
    }
    guarded("contraction", [&] { return suite_contraction(g, data, config); });
    if (region && eps_max_value) {
        guarded("shadowing", [&] {
            return suite_shadowing(g, data, *region, *eps_max_value, config);
        });
        try {
            out.constants = make_constants(g, data, config.delta0, config.t,
                                           resolved_R(config, data.abs_k()),
                                           resolved_epsilon(config, data, g));
        } catch (const Error&) {
            // constants stay defaulted; the corresponding suite already reported
        }
    }

    out.all_pass = std::all_of(out.suites.begin(), out.suites.end(),
                               [](const SuiteResult& s) { return s.pass; });
    return out;
}

}  // namespace loxo
