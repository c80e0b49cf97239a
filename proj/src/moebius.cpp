#include "loxo/moebius.hpp"

#include <sstream>

namespace loxo {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateMap: return "DegenerateMap";
        case ErrorCode::NotLoxodromic: return "NotLoxodromic";
        case ErrorCode::LinearMap: return "LinearMap";
        case ErrorCode::PoleDerivative: return "PoleDerivative";
        case ErrorCode::DegenerateLine: return "DegenerateLine";
        case ErrorCode::UnboundedImage: return "UnboundedImage";
        case ErrorCode::DeltaTooLarge: return "DeltaTooLarge";
        case ErrorCode::EmptyMargin: return "EmptyMargin";
        case ErrorCode::RTooSmall: return "RTooSmall";
        case ErrorCode::OrbitHitPole: return "OrbitHitPole";
        case ErrorCode::NoEscape: return "NoEscape";
        case ErrorCode::StartInAvoidedRegion: return "StartInAvoidedRegion";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

const char* to_string(MapClass cls) {
    switch (cls) {
        case MapClass::PurelyLoxodromic: return "PurelyLoxodromic";
        case MapClass::HyperbolicLoxodromic: return "HyperbolicLoxodromic";
        case MapClass::Elliptic: return "Elliptic";
        case MapClass::Parabolic: return "Parabolic";
        case MapClass::Identity: return "Identity";
    }
    return "UnknownClass";
}

MoebiusMap normalize(Cx a, Cx b, Cx c, Cx d) {
    const Cx det = a * d - b * c;
    if (std::abs(det) <= kDetTol) {
        std::ostringstream msg;
        msg << "ad - bc = " << det;
        fail(ErrorCode::DegenerateMap, msg.str());
    }
    const Cx s = std::sqrt(det);  // principal branch
    return {a / s, b / s, c / s, d / s};
}

ExtendedComplex apply(const MoebiusMap& g, ExtendedComplex z) {
    if (z.is_inf()) {
        if (std::abs(g.c) < kPoleThreshold) return ExtendedComplex::infinity();
        return ExtendedComplex::finite(g.a / g.c);
    }
    const Cx zv = z.value();
    const Cx den = g.c * zv + g.d;
    if (std::abs(den) < kPoleThreshold) return ExtendedComplex::infinity();
    return ExtendedComplex::finite((g.a * zv + g.b) / den);
}

MoebiusMap compose(const MoebiusMap& g1, const MoebiusMap& g2) {
    return normalize(g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
                     g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d);
}

MoebiusMap inverse(const MoebiusMap& g) { return {g.d, -g.b, -g.c, g.a}; }

MapClass classify(const MoebiusMap& g, double tol) {
    const Cx tr = g.trace();
    if (std::abs(tr.imag()) > tol) return MapClass::PurelyLoxodromic;
    const double re = tr.real();
    if (std::abs(g.b) <= tol && std::abs(g.c) <= tol && std::abs(g.a - g.d) <= tol)
        return MapClass::Identity;
    if (std::abs(std::abs(re) - 2.0) <= tol) return MapClass::Parabolic;
    if (std::abs(re) > 2.0) return MapClass::HyperbolicLoxodromic;
    return MapClass::Elliptic;
}

Cx derivative(const MoebiusMap& g, Cx z) {
    const Cx den = g.c * z + g.d;
    if (std::abs(den) < kPoleThreshold) {
        fail(ErrorCode::PoleDerivative, "derivative at the pole -d/c");
    }
    return 1.0 / (den * den);
}

}  // namespace loxo
