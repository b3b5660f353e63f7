#pragma once

#include "wisp/core/function_spec.hpp"
#include "wisp/core/region.hpp"
#include "wisp/harness/noise.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace wisp {

/// One experiment: a row of a results table. See docs/config.md for the
/// file schema.
struct ExperimentConfig {
    std::string name = "experiment";

    // grid
    int dim = 1;
    int nodes = 101;
    double tau = 0.01;
    double final_time = 1.0;

    // problem
    FunctionSpec f_true;
    FunctionSpec R;
    std::optional<Box> removed_box;   ///< omega = Omega \ box; nullopt means omega = Omega

    NoiseSpec noise;

    // reconstruction
    double K = 1.0;
    FunctionSpec f0 = FunctionSpec::constant(1.0);
    std::optional<double> epsilon;    ///< default 1% of delta0 (1e-6 when delta0 = 0)
    std::optional<double> alpha;      ///< default 0.1% of delta (1e-12 when delta0 = 0)
    int max_iterations = 1000;

    double theta = 0.25;

    std::optional<std::filesystem::path> output_dir;
    bool write_fields = true;

    GridSpec grid() const;
    ObservationRegion region(const GridSpec& grid) const;
};

/// Default-rule parameters for a noise level and the resulting delta.
double default_epsilon(double delta0);
double default_alpha(double delta0, double delta);

/// Throws ConfigError with the offending key on malformed input.
ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ExperimentConfig& config);

ExperimentConfig load_config(const std::filesystem::path& path);

} // namespace wisp
