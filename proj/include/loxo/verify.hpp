#pragma once

#include <string>
#include <vector>

#include "loxo/config.hpp"
#include "loxo/stability.hpp"

namespace loxo {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // worst-case slack; negative when failing
    std::string detail;
};

struct VerifyOutcome {
    LoxodromicData data;
    StabilityConstants constants;
    double eps_max = 0.0;
    std::vector<SuiteResult> suites;
    bool all_pass = false;
};

// Runs every invariance/bound suite for the configured map. Trial counts and
// step counts come from the config; all randomness derives from config.seed.
VerifyOutcome run_verify(const MoebiusMap& g, const RunConfig& config);

// Samplers shared by the verify suites and the acceptance battery.
// B_R in w-coordinates is {|w| >= R}; the transit annulus is
// {|w| < R} minus the avoided region.
Cx sample_br_point(Rng& rng, const LoxodromicData& data, double R);
Cx sample_transit_point(Rng& rng, const TransitRegion& region);
Cx sample_transit_w(Rng& rng, double R, const AvoidedRegionF& avoided);

// Random det-1 map with trace outside [-2,2] (margin 1e-6) and c away from 0.
// When `tame` is set, |k| is kept in [1.1, 25] so geometry stays desk-scale.
MoebiusMap random_loxodromic_map(Rng& rng, bool tame);

}  // namespace loxo
