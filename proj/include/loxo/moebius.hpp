#pragma once

#include "loxo/complex_ext.hpp"
#include "loxo/error.hpp"

namespace loxo {

// Trace-based dynamical type of a normalized Moebius map.
enum class MapClass {
    PurelyLoxodromic,      // tr not real
    HyperbolicLoxodromic,  // tr real, |tr| > 2
    Elliptic,              // tr real, |tr| < 2
    Parabolic,             // tr = +-2, not the identity
    Identity,
};

const char* to_string(MapClass cls);

inline bool is_loxodromic(MapClass cls) {
    return cls == MapClass::PurelyLoxodromic || cls == MapClass::HyperbolicLoxodromic;
}

inline constexpr double kClassifyTol = 1e-9;
inline constexpr double kDetTol = 1e-14;

// z -> (az + b)/(cz + d), stored with ad - bc = 1.
struct MoebiusMap {
    Cx a, b, c, d;

    Cx det() const { return a * d - b * c; }
    Cx trace() const { return a + d; }
    Cx pole() const { return -d / c; }  // preimage of infinity, c != 0

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

// Divides the coefficients by the principal square root of the determinant.
// Throws DegenerateMap when |ad - bc| <= kDetTol. Both signs of the root give
// the same map; the principal branch is fixed so results are reproducible.
MoebiusMap normalize(Cx a, Cx b, Cx c, Cx d);

// Total on the sphere: the pole -d/c maps to infinity, infinity maps to a/c
// (or stays fixed when c = 0). |cz + d| below kPoleThreshold counts as the pole.
ExtendedComplex apply(const MoebiusMap& g, ExtendedComplex z);

// Matrix product; result renormalized.
MoebiusMap compose(const MoebiusMap& g1, const MoebiusMap& g2);

// Adjugate (d, -b, -c, a); exact inverse of a det-1 map.
MoebiusMap inverse(const MoebiusMap& g);

// |Im tr| <= tol counts as real; |Re tr| is then compared against 2 with tol.
MapClass classify(const MoebiusMap& g, double tol = kClassifyTol);

// g'(z) = 1/(cz + d)^2. Throws PoleDerivative at z = -d/c.
Cx derivative(const MoebiusMap& g, Cx z);

}  // namespace loxo
