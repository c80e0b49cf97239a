#pragma once

#include <vector>

#include "loxo/region.hpp"

namespace loxo {

// Avoided region of the dilation w -> k w at w = 1:
//   R_f(1) = {|w| < |k| delta}  union  D_1(delta), ..., D_N(delta)
// with D_n(delta) = {w : |w - 1/k^n| < delta} and delta = t delta0/(|k|-1).
// The complement is forward invariant under the dilation, so a delta0-perturbed
// orbit started outside never enters.
struct AvoidedRegionF {
    Cx k;
    double delta0 = 0.0;
    double delta = 0.0;   // t * delta0 / (|k| - 1)
    double t = 2.0;
    int n_disks = 1;      // N, smallest integer > (log(|k|-1) + log delta)/log|k|, at least 1
    double outer_radius = 0.0;  // |k| * delta

    std::vector<Cx> disk_centers() const;  // 1/k^n for n = 1..N
};

// delta must stay below |k-1|/|k| (DeltaTooLarge otherwise); |k| > 1, t > 1.
AvoidedRegionF build_avoided_f(Cx k, double delta0, double t);

// Strict membership exactly as defined: |w| < |k| delta or |w - 1/k^n| < delta.
bool contains_f(const AvoidedRegionF& region, Cx w);

// Conservative variant used by orbit accounting: points within `band` of the
// boundary count as inside.
bool contains_f_safe(const AvoidedRegionF& region, Cx w, double band = 1e-12);

// True when w lies within `band` of some boundary circle of the region.
bool boundary_flag_f(const AvoidedRegionF& region, Cx w, double band = 1e-12);

// Pullback through h: R_g(infinity) = h^{-1}(R_f(1)). Membership of z is
// membership of h(z); infinity maps to 1, alpha (-> w = infinity) is outside.
struct AvoidedRegionG {
    AvoidedRegionF base;
    LoxodromicData data;

    std::vector<Cx> disk_centers_z() const;  // h^{-1}(1/k^n) = g^{-n}(infinity)
};

AvoidedRegionG build_avoided_g(const LoxodromicData& data, double delta0, double t);

bool contains_g(const AvoidedRegionG& region, ExtendedComplex z);
bool contains_g_safe(const AvoidedRegionG& region, ExtendedComplex z, double band = 1e-12);

// Admissible one-step perturbation for avoidance:
//   min{ dist(boundary of B_{|k|delta}, B_{|k|^2 delta}),
//        delta sqrt|k| |k-1|^2 / (sqrt(2|k-1|^2 + 2|c| delta sqrt|k|) |c| (delta|k|+1)) }.
// Throws EmptyMargin when the minimum is not positive.
double epsilon_max(const LoxodromicData& data, const MoebiusMap& g, double delta);

// Disk around the pole -d/c that the avoided region always contains:
// radius delta |k|^2 |alpha-beta| / (2 |k-1|^2). Requires delta < |k-1|/|k|.
Disk d_epsilon0_disk(const LoxodromicData& data, const MoebiusMap& g, double delta);

// Euclidean circle of h^{-1}(D_1), the Apollonius disk
// {z : |z + d/c| < delta |k/(k-1)| |z - alpha|}.
CircleGeom h_inv_d1_circle(const LoxodromicData& data, const MoebiusMap& g, double delta);

// sup of |g'| on the complement of the avoided region: 4|k-1|^2/(delta^2 |k|^3).
double g_prime_sup_bound(const LoxodromicData& data, double delta);

}  // namespace loxo
