#include "loxo/avoided.hpp"

#include <cmath>
#include <sstream>

namespace loxo {

std::vector<Cx> AvoidedRegionF::disk_centers() const {
    std::vector<Cx> centers;
    centers.reserve(static_cast<std::size_t>(n_disks));
    Cx c{1.0, 0.0};
    for (int n = 1; n <= n_disks; ++n) {
        c /= k;
        centers.push_back(c);
    }
    return centers;
}

AvoidedRegionF build_avoided_f(Cx k, double delta0, double t) {
    const double ak = std::abs(k);
    if (!(ak > 1.0)) fail(ErrorCode::InvalidConfig, "avoided region needs |k| > 1");
    if (!(delta0 > 0.0)) fail(ErrorCode::InvalidConfig, "delta0 must be positive");
    if (!(t > 1.0)) fail(ErrorCode::InvalidConfig, "t must exceed 1");

    AvoidedRegionF region;
    region.k = k;
    region.delta0 = delta0;
    region.t = t;
    region.delta = t * delta0 / (ak - 1.0);
    if (!(region.delta < std::abs(k - 1.0) / ak)) {
        std::ostringstream msg;
        msg << "delta = " << region.delta << " >= |k-1|/|k| = " << std::abs(k - 1.0) / ak;
        fail(ErrorCode::DeltaTooLarge, msg.str());
    }
    // N large enough that |k|^-N < (|k|-1) delta: every disk beyond the N-th
    // sits inside the central disk {|w| < |k| delta}, which makes the
    // complement exactly forward invariant. The bound goes negative for
    // delta (|k|-1) > 1; one disk is always kept so D_1 exists.
    const double bound = -(std::log(ak - 1.0) + std::log(region.delta)) / std::log(ak);
    region.n_disks = std::max(1, static_cast<int>(std::floor(bound)) + 1);
    region.outer_radius = ak * region.delta;
    return region;
}

bool contains_f(const AvoidedRegionF& region, Cx w) {
    if (std::abs(w) < region.outer_radius) return true;
    Cx c{1.0, 0.0};
    for (int n = 1; n <= region.n_disks; ++n) {
        c /= region.k;
        if (std::abs(w - c) < region.delta) return true;
    }
    return false;
}

bool contains_f_safe(const AvoidedRegionF& region, Cx w, double band) {
    return contains_f(region, w) || boundary_flag_f(region, w, band);
}

bool boundary_flag_f(const AvoidedRegionF& region, Cx w, double band) {
    if (std::abs(std::abs(w) - region.outer_radius) <= band * (1.0 + region.outer_radius))
        return true;
    Cx c{1.0, 0.0};
    for (int n = 1; n <= region.n_disks; ++n) {
        c /= region.k;
        if (std::abs(std::abs(w - c) - region.delta) <= band * (1.0 + region.delta)) return true;
    }
    return false;
}

std::vector<Cx> AvoidedRegionG::disk_centers_z() const {
    const ConjugatorH h(data);
    std::vector<Cx> centers;
    centers.reserve(base.disk_centers().size());
    for (Cx w : base.disk_centers()) centers.push_back(h.inv_finite(w));
    return centers;
}

AvoidedRegionG build_avoided_g(const LoxodromicData& data, double delta0, double t) {
    return {build_avoided_f(data.k, delta0, t), data};
}

namespace {

// h(z), with the conventions for the two special points: infinity -> 1 and
// alpha -> infinity (never inside the bounded w-region).
bool contains_g_impl(const AvoidedRegionG& region, ExtendedComplex z, double band, bool safe) {
    const ConjugatorH h(region.data);
    Cx w;
    if (z.is_inf()) {
        w = Cx{1.0, 0.0};
    } else {
        const Cx den = z.value() - region.data.alpha;
        if (std::abs(den) < kPoleThreshold) return false;
        w = (z.value() - region.data.beta) / den;
    }
    return safe ? contains_f_safe(region.base, w, band) : contains_f(region.base, w);
}

}  // namespace

bool contains_g(const AvoidedRegionG& region, ExtendedComplex z) {
    return contains_g_impl(region, z, 0.0, false);
}

bool contains_g_safe(const AvoidedRegionG& region, ExtendedComplex z, double band) {
    return contains_g_impl(region, z, band, true);
}

double epsilon_max(const LoxodromicData& data, const MoebiusMap& g, double delta) {
    if (std::abs(g.c) <= kDetTol) fail(ErrorCode::LinearMap, "epsilon bound needs c != 0");
    if (!(delta > 0.0)) fail(ErrorCode::InvalidConfig, "delta must be positive");
    const double ak = data.abs_k();
    const double sk = std::sqrt(ak);
    const double ac = std::abs(g.c);
    const double ak1 = std::abs(data.k - 1.0);

    const double term1 = dist_circle_to_b_region(data, ak * delta, ak * ak * delta);
    const double term2 = delta * sk * ak1 * ak1 /
                         (std::sqrt(2.0 * ak1 * ak1 + 2.0 * ac * delta * sk) * ac *
                          (delta * ak + 1.0));
    const double eps = std::min(term1, term2);
    if (!(eps > 1e-15)) {
        std::ostringstream msg;
        msg << "margin terms " << term1 << ", " << term2;
        fail(ErrorCode::EmptyMargin, msg.str());
    }
    return eps;
}

Disk d_epsilon0_disk(const LoxodromicData& data, const MoebiusMap& g, double delta) {
    const double ak = data.abs_k();
    const double ak1 = std::abs(data.k - 1.0);
    if (!(delta < ak1 / ak)) fail(ErrorCode::DeltaTooLarge, "needs delta < |k-1|/|k|");
    const double dist_ab = std::abs(data.alpha - data.beta);
    return {g.pole(), delta * ak * ak * dist_ab / (2.0 * ak1 * ak1)};
}

CircleGeom h_inv_d1_circle(const LoxodromicData& data, const MoebiusMap& g, double delta) {
    // Apollonius disk {|z + d/c| < lambda |z - alpha|}, lambda = delta|k|/|k-1| < 1.
    const double lambda = delta * data.abs_k() / std::abs(data.k - 1.0);
    if (!(lambda < 1.0)) fail(ErrorCode::DeltaTooLarge, "needs delta < |k-1|/|k|");
    const Cx p = g.pole();
    const double den = 1.0 - lambda * lambda;
    return {(p - lambda * lambda * data.alpha) / den,
            lambda * std::abs(p - data.alpha) / den};
}

double g_prime_sup_bound(const LoxodromicData& data, double delta) {
    if (!(delta > 0.0)) fail(ErrorCode::InvalidConfig, "delta must be positive");
    const double ak = data.abs_k();
    const double ak1 = std::abs(data.k - 1.0);
    return 4.0 * ak1 * ak1 / (delta * delta * ak * ak * ak);
}

}  // namespace loxo
