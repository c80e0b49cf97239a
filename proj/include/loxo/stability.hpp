#pragma once

#include <optional>
#include <span>

#include "loxo/orbit.hpp"

namespace loxo {

// Everything the shadowing bounds need, computed once per map/configuration.
//   K: Lipschitz constant of g on B_R (sup of |g'| over the disk), K < 1
//   M: 8|k-1|^2/(delta^2 |k|^3), per-step expansion envelope off the avoided region
//   N: uniform escaping time bound from the transit annulus
//   H(eps) = ((M^N - 1)/(M - 1) + 1/(1 - K)) eps, the uniform shadowing bound
struct StabilityConstants {
    double K = 0.0;
    double M = 0.0;
    int N = 1;
    double R = 0.0;
    double delta = 0.0;
    double delta0 = 0.0;
    double epsilon = 0.0;
    double h_of_eps = 0.0;
};

// Smallest admissible R: (sqrt|k|+1)^2/(sqrt|k|(|k|-1)). For R above this,
// B_R sits inside S(1) and g contracts on it.
double min_contraction_R(double kmod);

// sup of |g'| over the Euclidean disk B_R, evaluated in closed form at the
// point of B_R nearest to the pole -d/c. Requires R > min_contraction_R
// (RTooSmall otherwise); the result is always < 1 there.
double contraction_constant_K(const MoebiusMap& g, const LoxodromicData& data, double R);

// K^n d0 + (1 - K^n)/(1 - K) eps.
double hyers_ulam_contraction_bound(double K, double eps, int n, double d0);

struct EscapeTimeBound {
    int n = 1;             // smallest integer strictly above raw, at least 1
    int n_sufficient = 1;  // variant with ((sqrt|k|+1)/(sqrt|k|-1))^3, n <= n_sufficient
    double raw = 0.0;
};

// log{(1/delta0)(2(sqrt|k|+1)^2/(sqrt|k|(|k|-1)) + 1) + 1} / log|k|.
EscapeTimeBound escape_time_bound(double kmod, double delta0);

// (M^n - 1)/(M - 1) eps.
double finite_time_bound(double M, double eps, int n);

// Deviation bound at step n.
//   start in B_R:      contraction bound with d0 = 0
//   transit, n <= N:   finite-time bound
//   transit, n >  N:   (M^N - 1)/(M - 1) eps + (1 - K^{n-N})/(1 - K) eps
double combined_bound(const StabilityConstants& cst, int n, bool start_in_BR);

// sup over n of the applicable bound; linear in eps.
double h_of_epsilon(const StabilityConstants& cst);

StabilityConstants make_constants(const MoebiusMap& g, const LoxodromicData& data,
                                  double delta0, double t, double R, double epsilon);

// Transit annulus (C \ B_R) \ R_g(infinity), the region orbits must leave.
struct TransitRegion {
    double R;
    AvoidedRegionG avoided;

    bool contains(ExtendedComplex z) const;
    // Membership in the closure: |w| <= R and not in the open avoided region.
    bool closure_contains(ExtendedComplex z) const;
};

TransitRegion make_transit_region(double R, AvoidedRegionG avoided);

// Margin for forward invariance of B_R under perturbation:
// dist(B_{|k| R}, boundary of B_R).
double br_invariance_margin(const LoxodromicData& data, double R);

struct EscapeObservation {
    int max_escape_step = 0;   // max over orbits of the first index staying outside
    double max_w_noise = 0.0;  // sampled sup of |h(a_{n+1}) - k h(a_n)|
};

// Runs perturbed orbits from the given starts and records the empirical
// escaping time from the transit region. Starts already outside count as 0.
// Throws NoEscape when an orbit is still inside after `horizon` steps.
EscapeObservation empirical_escape_time(const MoebiusMap& g, const LoxodromicData& data,
                                        const TransitRegion& region,
                                        std::span<const Cx> starts,
                                        const PerturbationSpec& spec, int horizon);

}  // namespace loxo
