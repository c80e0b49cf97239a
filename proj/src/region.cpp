#include "loxo/region.hpp"

#include <cmath>
#include <sstream>

namespace loxo {

namespace {

void validate_radius(double r, bool zero_ok, const char* what) {
    if (!(std::isfinite(r) && (r > 0.0 || (zero_ok && r == 0.0)))) {
        std::ostringstream msg;
        msg << what << " = " << r;
        fail(ErrorCode::InvalidConfig, msg.str());
    }
}

void validate(const Region& region) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ApolloniusB>) {
                validate_radius(v.r, false, "B(r) ratio");
            } else if constexpr (std::is_same_v<T, ApolloniusCircle>) {
                validate_radius(v.r, false, "C(r) ratio");
            } else if constexpr (std::is_same_v<T, DiskExterior>) {
                validate_radius(v.r, true, "D(r) radius");  // D(0) is the whole plane
            } else if constexpr (std::is_same_v<T, SRegion>) {
                validate_radius(v.r, false, "S(r) parameter");
            } else {
                validate_radius(v.radius, false, "disk radius");
            }
        },
        region);
}

Cx require_c(const MoebiusMap& g) {
    if (std::abs(g.c) <= kDetTol) fail(ErrorCode::LinearMap, "region needs c != 0");
    return g.c;
}

}  // namespace

bool contains(const Region& region, ExtendedComplex point, const LoxodromicData& data,
              const MoebiusMap& g) {
    validate(region);
    if (point.is_inf()) {
        return std::visit(
            [&](const auto& v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ApolloniusB>) return v.r <= 1.0;
                else if constexpr (std::is_same_v<T, ApolloniusCircle>) return v.r == 1.0;
                else if constexpr (std::is_same_v<T, DiskExterior>) return true;
                else return false;  // S(r) and disks live in the plane
            },
            region);
    }
    const Cx z = point.value();
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ApolloniusB>) {
                return std::abs(z - data.beta) >= v.r * std::abs(z - data.alpha);
            } else if constexpr (std::is_same_v<T, ApolloniusCircle>) {
                return std::abs(z - data.beta) == v.r * std::abs(z - data.alpha);
            } else if constexpr (std::is_same_v<T, DiskExterior>) {
                return std::abs(z) >= v.r;
            } else if constexpr (std::is_same_v<T, SRegion>) {
                const Cx c = require_c(g);
                return std::abs(z + g.d / c) > v.r / std::abs(c);
            } else {
                return std::abs(z - v.center) < v.radius;
            }
        },
        region);
}

bool on_boundary(const Region& region, ExtendedComplex point, const LoxodromicData& data,
                 const MoebiusMap& g, double tol) {
    validate(region);
    if (point.is_inf()) {
        return std::visit(
            [&](const auto& v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ApolloniusB> ||
                              std::is_same_v<T, ApolloniusCircle>) {
                    return std::abs(v.r - 1.0) <= tol;
                } else {
                    return false;
                }
            },
            region);
    }
    const Cx z = point.value();
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ApolloniusB> || std::is_same_v<T, ApolloniusCircle>) {
                const double lhs = std::abs(z - data.beta);
                const double rhs = v.r * std::abs(z - data.alpha);
                return std::abs(lhs - rhs) <= tol * (1.0 + lhs + rhs);
            } else if constexpr (std::is_same_v<T, DiskExterior>) {
                return std::abs(std::abs(z) - v.r) <= tol * (1.0 + v.r);
            } else if constexpr (std::is_same_v<T, SRegion>) {
                const Cx c = require_c(g);
                const double rr = v.r / std::abs(c);
                return std::abs(std::abs(z + g.d / c) - rr) <= tol * (1.0 + rr);
            } else {
                return std::abs(std::abs(z - v.center) - v.radius) <= tol * (1.0 + v.radius);
            }
        },
        region);
}

CircleGeom apollonius_circle(const LoxodromicData& data, double rho) {
    validate_radius(rho, false, "Apollonius ratio");
    const double den = 1.0 - rho * rho;
    if (std::abs(den) <= 1e-14) {
        fail(ErrorCode::DegenerateLine, "C(1) is the fixed-point bisector line");
    }
    return {(data.beta - rho * rho * data.alpha) / den,
            rho * std::abs(data.alpha - data.beta) / std::abs(den)};
}

CircleOrLine image_of_circle(const MoebiusMap& m, const CircleGeom& circle) {
    CircleOrLine out;
    if (std::abs(m.c) <= kDetTol) {
        // Affine: z -> (a z + b)/d.
        out.circle = {(m.a * circle.center + m.b) / m.d,
                      std::abs(m.a / m.d) * circle.radius};
        return out;
    }
    const Cx pole = m.pole();
    const Cx q = circle.center - pole;
    const double qq = std::norm(q);
    const double denom = qq - circle.radius * circle.radius;
    const double scale = std::max(1.0, qq);
    if (std::abs(denom) <= 1e-14 * scale) {
        // Circle through the pole: image is the line through two mapped points
        // picked a quarter and a half turn away from the pole.
        const double phi = std::arg(q) + 3.14159265358979323846;  // pole direction from center
        const Cx p1 = circle.center +
                      circle.radius * Cx{std::cos(phi + 1.5707963267948966),
                                         std::sin(phi + 1.5707963267948966)};
        const Cx p2 = circle.center - circle.radius * Cx{std::cos(phi), std::sin(phi)};
        const Cx w1 = apply(m, ExtendedComplex::finite(p1)).value();
        const Cx w2 = apply(m, ExtendedComplex::finite(p2)).value();
        out.is_line = true;
        out.line_point = w1;
        out.line_dir = (w2 - w1) / std::abs(w2 - w1);
        return out;
    }
    // m(z) = a/c - (1/c^2)/(z - pole); inversion sends the circle to a circle.
    const Cx mu = -1.0 / (m.c * m.c);
    out.circle = {m.a / m.c + mu * std::conj(q) / denom,
                  std::abs(mu) * circle.radius / std::abs(denom)};
    return out;
}

CircleGeom h_image_of_circle(const LoxodromicData& data, double r) {
    (void)data;
    validate_radius(r, false, "C(r) ratio");
    return {Cx{0.0, 0.0}, r};
}

HSRegionPredicate h_image_of_S(const LoxodromicData& data, const MoebiusMap& g, double r) {
    require_c(g);
    validate_radius(r, false, "S(r) parameter");
    return {data.k, r};
}

CircleOrLine h_boundary_circle_of_S(const LoxodromicData& data, const MoebiusMap& g, double r,
                                    double line_tol) {
    require_c(g);
    validate_radius(r, false, "S(r) parameter");
    const Cx k = data.k;
    const double ak = data.abs_k();
    CircleOrLine out;
    if (std::abs(r * r - ak) <= line_tol * std::max(1.0, ak)) {
        // Line orthogonal to the segment [1/k, 1] through its midpoint.
        const Cx chord = 1.0 - 1.0 / k;
        out.is_line = true;
        out.line_point = 0.5 * (1.0 + 1.0 / k);
        out.line_dir = Cx{0.0, 1.0} * chord / std::abs(chord);
        return out;
    }
    out.circle = {(k * r * r - ak) / (k * (r * r - ak)),
                  r * std::abs(k - 1.0) / (std::sqrt(ak) * std::abs(r * r - ak))};
    return out;
}

double hS1_outer_bound(const LoxodromicData& data) {
    const double ak = data.abs_k();
    const double sk = std::sqrt(ak);
    const double rho =
        (sk * std::abs(data.k - 1.0) + std::abs(data.k - ak)) / (ak * (ak - 1.0));
    const double lo = 1.0 / sk;
    const double hi = (sk + 1.0) * (sk + 1.0) / (sk * (ak - 1.0));
    if (!(lo <= rho * (1.0 + 1e-12) && rho <= hi * (1.0 + 1e-12))) {
        std::ostringstream msg;
        msg << "outer bound " << rho << " outside [" << lo << ", " << hi << "]";
        fail(ErrorCode::NotLoxodromic, msg.str());
    }
    return rho;
}

CircleGeom h_image_of_disk(const LoxodromicData& data, Cx p, double r, double tol) {
    validate_radius(r, false, "disk radius");
    const Cx q = p - data.alpha;  // alpha is the pole of h
    const double aq = std::abs(q);
    if (std::abs(aq - r) <= tol * std::max(1.0, r)) {
        fail(ErrorCode::DegenerateLine, "disk boundary passes through alpha");
    }
    if (aq < r) {
        fail(ErrorCode::UnboundedImage, "alpha inside the disk; image is a disk complement");
    }
    // h(z) = 1 + (alpha - beta)/(z - alpha).
    const double denom = aq * aq - r * r;
    const Cx gamma = data.alpha - data.beta;
    return {1.0 + gamma * std::conj(q) / denom, std::abs(gamma) * r / std::abs(denom)};
}

double h_image_of_disk_radius(const LoxodromicData& data, Cx p, double r, double tol) {
    return h_image_of_disk(data, p, r, tol).radius;
}

ApolloniusB b_region_image(const MoebiusMap& g, const LoxodromicData& data, double r) {
    (void)g;
    validate_radius(r, false, "B(r) ratio");
    return {data.abs_k() * r};
}

Disk complement_disk_in_BR(const LoxodromicData& data, const MoebiusMap& g, double R) {
    require_c(g);
    validate_radius(R, false, "B_R ratio");
    const double ak = data.abs_k();
    const double radius =
        R * std::abs(data.k - 1.0) / (std::abs(g.c) * (R + 1.0) * std::sqrt(ak));
    return {data.beta, radius};
}

double dist_circle_to_b_region(const LoxodromicData& data, double rho1, double rho2) {
    validate_radius(rho1, false, "circle ratio");
    validate_radius(rho2, false, "region ratio");
    if (!(rho1 < rho2)) fail(ErrorCode::InvalidConfig, "need rho1 < rho2");

    const Cx mid = 0.5 * (data.alpha + data.beta);
    const Cx u = (data.alpha - data.beta) / std::abs(data.alpha - data.beta);
    const auto bisector_dist = [&](Cx z) {  // signed, positive on the alpha side
        return ((z - mid) * std::conj(u)).real();
    };

    const bool line1 = std::abs(rho1 - 1.0) <= 1e-14;
    const bool line2 = std::abs(rho2 - 1.0) <= 1e-14;
    if (line2) {
        // B(1) is the closed alpha-side halfplane; the rho1 < 1 circle sits on
        // the beta side.
        const CircleGeom c1 = apollonius_circle(data, rho1);
        return -bisector_dist(c1.center) - c1.radius;
    }
    const CircleGeom c2 = apollonius_circle(data, rho2);
    if (line1) {
        if (rho2 > 1.0) return bisector_dist(c2.center) - c2.radius;  // disk on alpha side
        return -bisector_dist(c2.center) - c2.radius;
    }
    const CircleGeom c1 = apollonius_circle(data, rho1);
    const double gap = std::abs(c1.center - c2.center);
    if (rho2 < 1.0) {
        // Region is the closed exterior of circle2; circle1 is nested inside it.
        return c2.radius - gap - c1.radius;
    }
    if (rho1 > 1.0) {
        // Both disks around alpha, circle1 the outer one.
        return c1.radius - gap - c2.radius;
    }
    // circle1 around beta, region disk around alpha: disjoint circles.
    return gap - c1.radius - c2.radius;
}

}  // namespace loxo
