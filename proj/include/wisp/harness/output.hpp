#pragma once

#include "wisp/harness/experiment.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace wisp {

/// Parsed field dump: header `dim <n> nodes <N> h <H>` then one value per
/// line in row-major node order.
struct FieldDump {
    int dim = 0;
    int nodes = 0;
    double h = 0.0;
    std::vector<double> values;
};

/// All writers throw ConfigError naming the path on I/O failure.
void write_convergence_csv(const std::filesystem::path& path, const IterationLog& log);
IterationLog read_convergence_csv(const std::filesystem::path& path);

void write_field_dump(const std::filesystem::path& path, const ScalarField& field);
FieldDump read_field_dump(const std::filesystem::path& path);

/// Rebuilds a field on `grid`; throws ConfigError if the header disagrees.
ScalarField to_field(const FieldDump& dump, const GridSpec& grid);

void write_summary_json(const std::filesystem::path& path, const ExperimentConfig& config,
                        const ExperimentResult& result);

/// Writes convergence.csv, summary.json and (optionally) f_recovered.txt
/// and f_true.txt into `dir`; returns the paths written.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                                                 ExperimentResult& result, const IterationLog& log,
                                                 const ScalarField* f_recovered, const ScalarField* f_true);

/// 17 significant digits; reads back to the identical double.
std::string format_exact(double value);

} // namespace wisp
