#pragma once

#include <array>
#include <cstddef>

namespace wisp {

/// Uniform space-time grid on (0,1)^dim x (0,T).
///
/// Spatial nodes sit at x_i = k h, k = 0..nodes_per_axis-1, with the same
/// step on every axis; time levels at t_j = j tau, j = 0..time_levels-1.
/// Nodes are numbered row-major: the last axis varies fastest.
class GridSpec {
public:
    GridSpec() = default;

    int dim() const noexcept { return dim_; }
    int nodes_per_axis() const noexcept { return nodes_; }
    int time_levels() const noexcept { return levels_; }
    double h() const noexcept { return h_; }
    double tau() const noexcept { return tau_; }
    double final_time() const noexcept { return final_time_; }

    std::size_t node_count() const noexcept { return node_count_; }

    /// Distance in the flat index between neighbours along `axis`.
    std::size_t stride(int axis) const noexcept;

    /// Per-axis integer coordinates of a flat node index (unused axes are 0).
    std::array<int, 3> multi_index(std::size_t node) const noexcept;

    /// Physical coordinates of a node (unused axes are 0).
    std::array<double, 3> coordinates(std::size_t node) const noexcept;

    double time(int level) const noexcept { return level * tau_; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    friend GridSpec build_grid(int dim, int nodes_per_axis, double tau, double final_time);

    int dim_ = 0;
    int nodes_ = 0;
    int levels_ = 0;
    double h_ = 0.0;
    double tau_ = 0.0;
    double final_time_ = 0.0;
    std::size_t node_count_ = 0;
};

/// Validated grid construction. Throws ConfigError when dim is not 1..3,
/// nodes_per_axis < 3, tau <= 0, or tau does not divide T.
/// The stored step is T / J so that tau * J reproduces T.
GridSpec build_grid(int dim, int nodes_per_axis, double tau, double final_time);

/// Throws ConfigError naming `what` when the grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

} // namespace wisp
