#include "loxo/loxodromic.hpp"

#include <sstream>

namespace loxo {

namespace {

void check_residual(double value, double tol, const char* what) {
    if (!(value <= tol)) {
        std::ostringstream msg;
        msg << what << " residual " << value << " exceeds " << tol;
        fail(ErrorCode::NotLoxodromic, msg.str());
    }
}

}  // namespace

LoxodromicData fixed_points(const MoebiusMap& g, double tol) {
    if (std::abs(g.c) <= kDetTol) {
        fail(ErrorCode::LinearMap, "c = 0 fixes infinity; no finite fixed-point pair");
    }
    const MapClass cls = classify(g, tol);
    if (!is_loxodromic(cls)) {
        std::ostringstream msg;
        msg << "trace " << g.trace() << " classifies as " << to_string(cls);
        fail(ErrorCode::NotLoxodromic, msg.str());
    }

    // Roots of c z^2 - (a-d) z - b = 0; c*alpha + d = (tr + s)/2 for the + root.
    const Cx tr = g.trace();
    const Cx s = std::sqrt(tr * tr - 4.0);
    Cx alpha = (g.a - g.d + s) / (2.0 * g.c);
    Cx beta = (g.a - g.d - s) / (2.0 * g.c);
    Cx cad = (tr + s) / 2.0;
    Cx cbd = (tr - s) / 2.0;
    if (std::abs(cad) < 1.0) {  // principal branch picked the repelling root
        std::swap(alpha, beta);
        std::swap(cad, cbd);
    }

    LoxodromicData data{alpha, beta, cad * cad, cad, cbd, cls};

    check_residual(std::abs(cad * cbd - 1.0), 1e-10, "(c*alpha+d)(c*beta+d) = 1");
    check_residual(std::abs(data.k - 1.0 / (cbd * cbd)), 1e-10 * std::abs(data.k),
                   "k = 1/(c*beta+d)^2");
    check_residual(std::abs(cad + 1.0 / cad - tr), 1e-10, "sqrt(k) + 1/sqrt(k) = tr");
    check_residual(std::abs(alpha + beta - (g.a - g.d) / g.c), 1e-9 * (1.0 + std::abs(alpha)),
                   "alpha + beta = (a-d)/c");
    check_residual(std::abs(alpha * beta + g.b / g.c), 1e-9 * (1.0 + std::abs(alpha * beta)),
                   "alpha*beta = -b/c");
    if (!(std::abs(cad) > 1.0 && std::abs(cbd) < 1.0)) {
        fail(ErrorCode::NotLoxodromic, "fixed points could not be ordered attracting/repelling");
    }
    return data;
}

Cx multiplier(const LoxodromicData& data, double tol) {
    if (data.cls == MapClass::PurelyLoxodromic) {
        if (std::abs(data.k.imag()) <= tol && data.k.real() > 0.0) {
            fail(ErrorCode::NotLoxodromic,
                 "purely loxodromic multiplier landed on the positive real axis");
        }
    }
    return data.k;
}

ExtendedComplex ConjugatorH::map(ExtendedComplex z) const {
    if (z.is_inf()) return ExtendedComplex::finite(Cx{1.0, 0.0});
    const Cx den = z.value() - alpha;
    if (std::abs(den) < kPoleThreshold) return ExtendedComplex::infinity();
    return ExtendedComplex::finite((z.value() - beta) / den);
}

ExtendedComplex ConjugatorH::inv(ExtendedComplex w) const {
    if (w.is_inf()) return ExtendedComplex::finite(alpha);
    const Cx den = w.value() - 1.0;
    if (std::abs(den) < kPoleThreshold) return ExtendedComplex::infinity();
    return ExtendedComplex::finite((alpha * w.value() - beta) / den);
}

Cx ConjugatorH::map_finite(Cx z) const { return (z - beta) / (z - alpha); }

Cx ConjugatorH::inv_finite(Cx w) const { return (alpha * w - beta) / (w - 1.0); }

Cx ConjugatorH::derivative(Cx z) const {
    const Cx den = z - alpha;
    return (beta - alpha) / (den * den);
}

}  // namespace loxo
