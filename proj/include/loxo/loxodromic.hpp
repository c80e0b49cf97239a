#pragma once

#include "loxo/moebius.hpp"

namespace loxo {

// Fixed-point data of a loxodromic map: alpha attracting, beta repelling,
// multiplier k = (c*alpha + d)^2 with |k| > 1.
//
// Invariants enforced at construction:
//   |g'(alpha)| < 1 < |g'(beta)|
//   (c*alpha + d)(c*beta + d) = 1           (det-1 identity)
//   k = (c*alpha + d)^2 = 1/(c*beta + d)^2
//   sqrt(k) + 1/sqrt(k) = tr(g)  for the branch sqrt(k) = c*alpha + d
struct LoxodromicData {
    Cx alpha;
    Cx beta;
    Cx k;
    Cx c_alpha_d;  // c*alpha + d
    Cx c_beta_d;   // c*beta + d
    MapClass cls;

    double abs_k() const { return std::abs(k); }
};

// Solves c z^2 - (a - d) z - b = 0 and labels the roots so that
// |c*alpha + d| > 1 (attracting side). Throws LinearMap when c ~ 0 and
// NotLoxodromic when the trace is in [-2, 2] within tol.
LoxodromicData fixed_points(const MoebiusMap& g, double tol = kClassifyTol);

// Dilation factor of the conjugated map w -> k w. For purely loxodromic input
// k is never a positive real number; violations throw NotLoxodromic.
Cx multiplier(const LoxodromicData& data, double tol = kClassifyTol);

// h(z) = (z - beta)/(z - alpha): beta -> 0, alpha -> inf, inf -> 1.
// Conjugates g to the dilation w -> k w.
struct ConjugatorH {
    Cx alpha;
    Cx beta;

    explicit ConjugatorH(const LoxodromicData& data) : alpha(data.alpha), beta(data.beta) {}
    ConjugatorH(Cx a, Cx b) : alpha(a), beta(b) {}

    ExtendedComplex map(ExtendedComplex z) const;         // h
    ExtendedComplex inv(ExtendedComplex w) const;         // h^{ -1 }(w) = (alpha w - beta)/(w - 1)
    Cx map_finite(Cx z) const;                            // h on C \ {alpha}
    Cx inv_finite(Cx w) const;                            // h^{-1} on C \ {1}
    Cx derivative(Cx z) const;                            // h'(z) = (beta - alpha)/(z - alpha)^2
};

}  // namespace loxo
