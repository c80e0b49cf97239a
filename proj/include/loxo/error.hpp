#pragma once

#include <stdexcept>
#include <string>

namespace loxo {

enum class ErrorCode {
    DegenerateMap,         // ad - bc == 0, no Moebius map
    NotLoxodromic,         // trace in [-2, 2]
    LinearMap,             // c == 0, infinity is fixed
    PoleDerivative,        // derivative requested at z = -d/c
    DegenerateLine,        // image circle degenerates to a straight line
    UnboundedImage,        // disk contains the pole, image is a disk complement
    DeltaTooLarge,         // delta >= |k-1|/|k|
    EmptyMargin,           // admissible perturbation bound is <= 0
    RTooSmall,             // B_R not inside the contraction locus S(1)
    OrbitHitPole,          // perturbed orbit stepped onto -d/c
    NoEscape,              // orbit failed to leave the transit region
    StartInAvoidedRegion,  // simulation start inside the avoided region
    InvalidConfig,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace loxo
