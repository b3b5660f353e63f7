#pragma once

#include "wisp/harness/experiment.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wisp {

/// One reference row: the configuration and the reported (M, err).
struct TableRow {
    ExperimentConfig config;
    int reported_iterations = 0;
    double reported_error = 0.0;
};

/// Names accepted by reference_table: table1 .. table6.
std::vector<std::string> table_names();

/// Rows of a named table. `nodes` overrides the spatial resolution; the
/// time step follows tau = h as in the reference meshes. Row r uses noise
/// seed `seed + r`. Throws ConfigError for an unknown name.
std::vector<TableRow> reference_table(const std::string& name, std::optional<int> nodes = std::nullopt,
                                  std::uint64_t seed = 1);

/// Grid parameters for a resolution override: tau = T / round(T (nodes - 1)).
void set_resolution(ExperimentConfig& config, int nodes);

/// K for `scaled` that keeps the ratio K / ||A||^2 of `native`. Coarse
/// meshes widen the observed face strips, so ||A||^2 changes with the
/// resolution. Both norms come from `iterations` power steps.
double rescaled_tuning_constant(const ExperimentConfig& native, const ExperimentConfig& scaled, int iterations = 8);

} // namespace wisp
