#pragma once

#include <variant>

#include "loxo/loxodromic.hpp"

namespace loxo {

struct CircleGeom {
    Cx center;
    double radius = 0.0;
};

// Moebius images of circles are circles or straight lines; the line arm keeps
// a point on the line and a unit direction.
struct CircleOrLine {
    bool is_line = false;
    CircleGeom circle;  // valid iff !is_line
    Cx line_point;      // valid iff is_line
    Cx line_dir;        // unit length, valid iff is_line
};

// Region vocabulary. Inequalities are exactly as written here:
// B and D closed (>=), S and Disk open (> / <).
struct ApolloniusB {
    double r;
};  // {z : |z-beta| >= r|z-alpha|}, plus infinity iff r <= 1
struct ApolloniusCircle {
    double r;
};  // {z : |z-beta| = r|z-alpha|}; r = 1 is the perpendicular bisector line
struct DiskExterior {
    double r;
};  // {w : |w| >= r}; D(0) is the whole plane; contains infinity
struct SRegion {
    double r;
};  // {z : |z + d/c| > r/|c|}; needs c != 0; excludes infinity
struct Disk {
    Cx center;
    double radius;
};  // {z : |z - center| < radius}

using Region = std::variant<ApolloniusB, ApolloniusCircle, DiskExterior, SRegion, Disk>;

// Exact membership predicate. Apollonius variants read alpha/beta from `data`,
// SRegion reads c, d from `g`.
bool contains(const Region& region, ExtendedComplex point, const LoxodromicData& data,
              const MoebiusMap& g);

// True when the point sits within `tol` of the defining equality of the region.
bool on_boundary(const Region& region, ExtendedComplex point, const LoxodromicData& data,
                 const MoebiusMap& g, double tol = 1e-12);

// Euclidean circle of C(rho) = {|z-beta| = rho|z-alpha|}, rho != 1:
// center (beta - rho^2 alpha)/(1 - rho^2), radius rho|alpha-beta|/|1-rho^2|.
// For rho < 1 the circle encloses beta, for rho > 1 it encloses alpha.
CircleGeom apollonius_circle(const LoxodromicData& data, double rho);

// Image of a circle under an arbitrary Moebius map (line when the circle
// passes through the pole).
CircleOrLine image_of_circle(const MoebiusMap& m, const CircleGeom& circle);

// h(C(r)) = {|w| = r}; r = 1 is the image of the extended line through the
// fixed-point bisector.
CircleGeom h_image_of_circle(const LoxodromicData& data, double r);

// Membership predicate of h(S(r)) = {w : (sqrt|k|/r)|w - 1/k| > |w - 1|}.
struct HSRegionPredicate {
    Cx k;
    double r;
    bool operator()(Cx w) const {
        return std::sqrt(std::abs(k)) / r * std::abs(w - 1.0 / k) > std::abs(w - 1.0);
    }
};
HSRegionPredicate h_image_of_S(const LoxodromicData& data, const MoebiusMap& g, double r);

// Closed form for the circle h(boundary of S(r)):
//   center (k r^2 - |k|)/(k (r^2 - |k|)), radius r|k-1|/(sqrt|k| |r^2 - |k||).
// At r = sqrt|k| the image is the straight line orthogonal to the segment
// [1/k, 1] through its midpoint; returned via the line arm.
CircleOrLine h_boundary_circle_of_S(const LoxodromicData& data, const MoebiusMap& g, double r,
                                    double line_tol = 1e-12);

// rho with {|w| > rho} inside h(S(1)):
//   rho = (sqrt|k| |k-1| + |k - |k||)/(|k|(|k|-1)),
// sandwiched between 1/sqrt|k| and (sqrt|k|+1)^2/(sqrt|k|(|k|-1)).
double hS1_outer_bound(const LoxodromicData& data);

// Exact image circle of the open disk U(p, r) under h. Throws UnboundedImage
// when alpha lies inside U(p, r) and DegenerateLine when the boundary passes
// through alpha.
CircleGeom h_image_of_disk(const LoxodromicData& data, Cx p, double r, double tol = 1e-12);
double h_image_of_disk_radius(const LoxodromicData& data, Cx p, double r, double tol = 1e-12);

// g(B(r)) = B(|k| r).
ApolloniusB b_region_image(const MoebiusMap& g, const LoxodromicData& data, double r);

// Disk around beta inside the closure of the complement of B_R:
// radius R|k-1| / (|c| (R+1) sqrt|k|) = R |alpha-beta| / (R+1).
Disk complement_disk_in_BR(const LoxodromicData& data, const MoebiusMap& g, double R);

// Euclidean distance between the boundary circle of B(rho1) and the region
// B(rho2), rho1 < rho2 (nested, disjoint except in the degenerate case).
// Returns <= 0 when the sets touch or overlap.
double dist_circle_to_b_region(const LoxodromicData& data, double rho1, double rho2);

}  // namespace loxo
