#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loxo/loxodromic.hpp"

namespace loxo {

inline constexpr const char* kVersion = "1.0.0";

// One struct for every CLI verb; flags map onto fields one-to-one, an optional
// JSON config file mirrors them (flags win on conflict).
struct RunConfig {
    // Demo map: z -> (1.64 z - 25 + 11.07i)/(0.04 z + 0.27i).
    Cx a{1.64, 0.0};
    Cx b{-25.0, 11.07};
    Cx c{0.04, 0.0};
    Cx d{0.0, 0.27};

    double epsilon = -1.0;  // < 0: auto, 1e-3 * epsilon_max
    double delta0 = 0.005;
    double t = 2.0;
    double R = -1.0;        // < 0: auto, 1.01 * min admissible contraction R
    int steps = 200;
    int trials = 1000;
    std::uint64_t seed = 20260809;  // fixed default, never time-based
    std::string out;                // empty: stdout
    bool force = false;
    Cx z0{0.0, 0.0};
    std::vector<double> rvals;      // empty: {1/sqrt|k|, 0.5, 1, 2}

    MoebiusMap map() const { return normalize(a, b, c, d); }
};

// Accepts "re,im" and "a+bi" literals ('.' decimal, cosmetic unicode minus
// tolerated). Throws ParseError.
Cx parse_complex(const std::string& text);

// Canonical "re,im" with 17 significant digits; parse(format(z)) == z.
std::string format_complex(Cx z);

// Overlays fields present in a JSON config file onto `config`.
void apply_config_file(RunConfig& config, const std::string& path);

// Throws InvalidConfig on out-of-range values (trials/steps < 1, t <= 1, ...).
void validate_config(const RunConfig& config);

double resolved_R(const RunConfig& config, double kmod);
double resolved_epsilon(const RunConfig& config, const LoxodromicData& data,
                        const MoebiusMap& g);
std::vector<double> resolved_rvals(const RunConfig& config, double kmod);

}  // namespace loxo
