#pragma once

#include "wisp/core/function_spec.hpp"

#include <Eigen/Dense>

#include <vector>

namespace wisp {

/// Carleman weight parameters: psi = d(x) - beta t^2, phi = exp(lambda psi).
struct WeightSpec {
    FunctionSpec d;
    double beta = 0.5;
    double lambda = 1.0;
};

/// psi and phi on Omega x [-T, T]. Column j is t_j = -T + j tau with the
/// spatial grid's tau, so there are 2 J + 1 levels and t = 0 is column J.
struct WeightFields {
    GridSpec grid;
    Eigen::MatrixXd psi;
    Eigen::MatrixXd phi;

    int levels() const noexcept { return static_cast<int>(psi.cols()); }
    int zero_level() const noexcept { return (levels() - 1) / 2; }
    double time(int level) const noexcept { return (level - zero_level()) * grid.tau(); }
};

/// Throws ConfigError unless 0 < beta < 1, lambda > 0 and d > 0 at every node.
WeightFields eval_weights(const WeightSpec& spec, const GridSpec& grid);

/// Q_delta = {psi > delta} and Omega_delta = {psi(., 0) > delta}.
struct LevelSetMasks {
    double delta = 0.0;
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> q_mask;
    Eigen::Matrix<bool, Eigen::Dynamic, 1> omega_mask;
};

LevelSetMasks level_sets(const WeightFields& weights, double delta);

} // namespace wisp
