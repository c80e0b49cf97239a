#pragma once

#include <cmath>
#include <complex>
#include <ostream>

namespace loxo {

using Cx = std::complex<double>;

// Point on the Riemann sphere: a finite complex number or the point at infinity.
// Finite values must have finite components; infinity compares equal only to infinity.
struct ExtendedComplex {
    constexpr ExtendedComplex() : v_(0.0, 0.0), inf_(false) {}

    static constexpr ExtendedComplex infinity() {
        ExtendedComplex p;
        p.inf_ = true;
        return p;
    }
    static constexpr ExtendedComplex finite(Cx v) {
        ExtendedComplex p;
        p.v_ = v;
        return p;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    // Valid only when finite.
    constexpr Cx value() const { return v_; }

    friend constexpr bool operator==(const ExtendedComplex& x, const ExtendedComplex& y) {
        if (x.inf_ || y.inf_) return x.inf_ && y.inf_;
        return x.v_ == y.v_;
    }
    friend constexpr bool operator!=(const ExtendedComplex& x, const ExtendedComplex& y) {
        return !(x == y);
    }

private:
    Cx v_;
    bool inf_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedComplex& p) {
    if (p.is_inf()) return os << "inf";
    return os << p.value();
}

inline bool finite_components(Cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// |z| guard used before dividing: treats anything below the underflow floor as zero.
inline constexpr double kPoleThreshold = 1e-300;

}  // namespace loxo
