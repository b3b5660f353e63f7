#pragma once

#include "wisp/geometry/observability.hpp"
#include "wisp/harness/config.hpp"
#include "wisp/reconstruction/thresholding.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace wisp {

struct ExperimentResult {
    std::string name;
    int iterations = 0;            ///< M
    double error = 0.0;            ///< relative L2 error of f_M
    double seconds = 0.0;          ///< wall time of the reconstruction loop
    double final_objective = 0.0;
    StopReason stop = StopReason::MaxIterations;

    double delta = 0.0;            ///< absolute noise level
    double alpha = 0.0;
    double epsilon = 0.0;
    double K = 0.0;
    std::optional<double> norm_bound;  ///< power-iteration estimate of ||A||^2, if requested

    ObservabilityReport geometry;      ///< relaxed check of T against omega
    std::vector<std::filesystem::path> artifacts;

    /// Equality of everything except wall time and artifact paths.
    bool same_values(const ExperimentResult& other) const;
};

struct RunOptions {
    int norm_iterations = 0;          ///< power iterations for the K advisory; 0 skips
    bool write_outputs = true;        ///< honoured only when the config names an output dir
    IterationObserver observer;
};

/// Everything run_experiment produces, for callers that need the fields.
struct ExperimentRun {
    ExperimentResult result;
    ReconstructionResult reconstruction;
    ScalarField f_true;
};

/// sample f_true and R -> forward solve -> noise -> thresholding loop ->
/// relative error; writes the convergence CSV, field dumps and summary
/// when the config has an output directory. Deterministic given the seed.
ExperimentRun run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Builds the setup (grid, R, region, scheme) a config describes.
ProblemSetup make_setup(const ExperimentConfig& config);

} // namespace wisp
