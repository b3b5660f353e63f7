#include "wisp/core/grid.hpp"

#include "wisp/errors.hpp"

#include <cmath>
#include <string>

namespace wisp {

std::size_t GridSpec::stride(int axis) const noexcept
{
    std::size_t s = 1;
    for (int a = dim_ - 1; a > axis; --a)
        s *= static_cast<std::size_t>(nodes_);
    return s;
}

std::array<int, 3> GridSpec::multi_index(std::size_t node) const noexcept
{
    std::array<int, 3> k{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
        k[a] = static_cast<int>(node % static_cast<std::size_t>(nodes_));
        node /= static_cast<std::size_t>(nodes_);
    }
    return k;
}

std::array<double, 3> GridSpec::coordinates(std::size_t node) const noexcept
{
    const auto k = multi_index(node);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a)
        x[a] = k[a] * h_;
    return x;
}

GridSpec build_grid(int dim, int nodes_per_axis, double tau, double final_time)
{
    if (dim < 1 || dim > 3)
        throw ConfigError("grid: dim must be 1, 2 or 3 (got " + std::to_string(dim) + ")");
    if (nodes_per_axis < 3)
        throw ConfigError("grid: nodes_per_axis must be >= 3 (got " + std::to_string(nodes_per_axis) + ")");
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw ConfigError("grid: tau must be positive");
    if (!(final_time > 0.0) || !std::isfinite(final_time))
        throw ConfigError("grid: T must be positive");

    const double steps = final_time / tau;
    const double rounded = std::round(steps);
    if (rounded < 1.0 || std::abs(steps - rounded) > 1e-9 * std::max(1.0, rounded))
        throw ConfigError("grid: tau = " + std::to_string(tau) + " does not divide T = "
                          + std::to_string(final_time));

    GridSpec g;
    g.dim_ = dim;
    g.nodes_ = nodes_per_axis;
    g.levels_ = static_cast<int>(rounded) + 1;
    g.h_ = 1.0 / (nodes_per_axis - 1);
    g.tau_ = final_time / rounded;
    g.final_time_ = final_time;
    g.node_count_ = 1;
    for (int a = 0; a < dim; ++a)
        g.node_count_ *= static_cast<std::size_t>(nodes_per_axis);
    return g;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what)
{
    if (!(a == b))
        throw ConfigError(std::string(what) + ": grid mismatch");
}

} // namespace wisp
