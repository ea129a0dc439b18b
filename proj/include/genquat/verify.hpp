#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genquat/oracle.hpp"

namespace genquat {

// One property check over a random sample. For most checks worst must stay
// <= tolerance; exceed_bound flips the direction (the non-commutativity
// witness must be large, not small).
struct CheckResult {
    std::string name;
    int samples = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool exceed_bound = false;
    bool passed = false;
};

struct VerifyOptions {
    int samples = 1000;
    std::uint64_t seed = 12345;
    int ode_steps = 1000;
    int ode_samples = 100;
    // Per-sample pass policy for the two round-trip checks; the defaults are
    // the shipped contract.
    ToleranceConfig round_trip{1e-9, 1e-12};
};

// Runs the full property battery: closed form vs series and ODE oracles,
// both round trips, the norm identity, the Hamilton specialization, the
// spectral identity, the non-commutativity witness plus the commuting
// family, and left/right defining-equation invariance. Coefficients are
// drawn uniformly from [-2,2] with (alpha,beta) cycling over the grid
// {-2,-1,-0.5,0.5,1,2}^2. Deterministic for a fixed seed.
std::vector<CheckResult> run_battery(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

} // namespace genquat
