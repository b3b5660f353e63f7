#pragma once

#include "wisp/harness/experiment.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wisp {

struct SweepLevel {
    double delta0 = 0.0;
    std::vector<double> errors;     ///< one per repeat
    std::vector<int> iterations;
    double mean_error = 0.0;
    double std_error = 0.0;         ///< sample standard deviation (0 for one repeat)
};

struct SweepResult {
    std::vector<SweepLevel> levels;
    /// Least-squares slope of log(mean err) against log(delta0); absent with
    /// fewer than two distinct levels.
    std::optional<double> slope;
};

/// Runs `base` at each noise level `repeats` times. Repeat r uses seed
/// base.noise.seed + r at every level. Levels must be positive and
/// nondecreasing. Output writing is disabled for the individual runs.
SweepResult stability_sweep(const ExperimentConfig& base, std::span<const double> delta0_list, int repeats);

/// Least-squares slope of y against x; nullopt when x has no spread.
std::optional<double> fit_slope(std::span<const double> x, std::span<const double> y);

} // namespace wisp
