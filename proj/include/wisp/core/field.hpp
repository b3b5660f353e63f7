#pragma once

#include "wisp/core/grid.hpp"

#include <Eigen/Dense>

namespace wisp {

/// Nodal values of a function of x on the spatial grid.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& grid)
        : grid_(grid), values_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.node_count())))
    {
    }
    ScalarField(const GridSpec& grid, Eigen::VectorXd values);

    static ScalarField constant(const GridSpec& grid, double value)
    {
        return ScalarField(grid, Eigen::VectorXd::Constant(static_cast<Eigen::Index>(grid.node_count()), value));
    }

    const GridSpec& grid() const noexcept { return grid_; }
    const Eigen::VectorXd& values() const noexcept { return values_; }
    Eigen::VectorXd& values() noexcept { return values_; }

    double operator[](Eigen::Index i) const { return values_[i]; }
    double& operator[](Eigen::Index i) { return values_[i]; }
    Eigen::Index size() const noexcept { return values_.size(); }

    bool all_finite() const { return values_.allFinite(); }

private:
    GridSpec grid_;
    Eigen::VectorXd values_;
};

/// Nodal values of u(x,t) on every time level. Storage is node-major
/// within a level: column j holds the slice at t_j and is contiguous.
class SpaceTimeField {
public:
    SpaceTimeField() = default;
    explicit SpaceTimeField(const GridSpec& grid)
        : grid_(grid)
        , data_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(grid.node_count()), grid.time_levels()))
    {
    }
    SpaceTimeField(const GridSpec& grid, Eigen::MatrixXd data);

    const GridSpec& grid() const noexcept { return grid_; }
    int time_levels() const noexcept { return static_cast<int>(data_.cols()); }

    auto slice(int level) { return data_.col(level); }
    auto slice(int level) const { return data_.col(level); }

    ScalarField slice_field(int level) const { return ScalarField(grid_, data_.col(level)); }

    const Eigen::MatrixXd& data() const noexcept { return data_; }
    Eigen::MatrixXd& data() noexcept { return data_; }

    bool all_finite() const { return data_.allFinite(); }

private:
    GridSpec grid_;
    Eigen::MatrixXd data_;
};

} // namespace wisp
