#pragma once

#include "wisp/core/grid.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace wisp {

/// Closed axis-aligned box [lower_i, upper_i] inside [0,1]^dim.
struct Box {
    std::array<double, 3> lower{0.0, 0.0, 0.0};
    std::array<double, 3> upper{0.0, 0.0, 0.0};

    /// Length of the box diagonal over the first `dim` axes.
    double diagonal(int dim) const;
};

/// Observation subdomain omega = Omega minus a closed box.
///
/// A node belongs to omega iff it lies strictly outside the removed box on
/// at least one axis; nodes on a box face are not observed. Weights are the
/// tensor trapezoidal cell weights, zeroed at unobserved nodes.
class ObservationRegion {
public:
    ObservationRegion() = default;

    /// omega = Omega \ box. Throws ConfigError if the box leaves [0,1]^dim
    /// or has lower > upper on some axis.
    ObservationRegion(const GridSpec& grid, const Box& removed);

    /// omega = Omega (nothing removed).
    static ObservationRegion whole(const GridSpec& grid);

    const GridSpec& grid() const noexcept { return grid_; }
    const std::optional<Box>& removed_box() const noexcept { return removed_; }

    bool contains(std::size_t node) const { return indicator_[static_cast<Eigen::Index>(node)] != 0.0; }

    /// 1 on observed nodes, 0 elsewhere.
    const Eigen::VectorXd& indicator() const noexcept { return indicator_; }
    const Eigen::VectorXd& weights() const noexcept { return weights_; }

    std::size_t observed_count() const;

private:
    GridSpec grid_;
    std::optional<Box> removed_;
    Eigen::VectorXd indicator_;
    Eigen::VectorXd weights_;
};

} // namespace wisp
