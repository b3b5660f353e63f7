#include "wisp/geometry/observability.hpp"

#include <cmath>

namespace wisp {

namespace {

// A boundary node lies outside closure(omega) iff some neighbourhood of it
// in the closed cube is contained in the removed box.
bool in_observed_closure(const std::array<double, 3>& x, const ObservationRegion& region, double tol)
{
    if (!region.removed_box())
        return true;
    const Box& b = *region.removed_box();
    for (int a = 0; a < region.grid().dim(); ++a) {
        const bool strictly_inside = x[a] > b.lower[a] + tol && x[a] < b.upper[a] - tol;
        const bool flush_low = std::abs(x[a]) <= tol && b.lower[a] <= tol && b.upper[a] > tol;
        const bool flush_high = std::abs(x[a] - 1.0) <= tol && b.upper[a] >= 1.0 - tol && b.lower[a] < 1.0 - tol;
        if (!(strictly_inside || flush_low || flush_high))
            return true;
    }
    return false;
}

} // namespace

std::string FaceReport::name() const
{
    return "x" + std::to_string(axis + 1) + "=" + (side == 0 ? "0" : "1");
}

double unobserved_diameter(const ObservationRegion& region)
{
    if (!region.removed_box())
        return 0.0;
    return region.removed_box()->diagonal(region.grid().dim());
}

ObservabilityReport check_observability(const std::array<double, 3>& x0, const ObservationRegion& region,
                                        double final_time, ObservabilityMode mode)
{
    const GridSpec& grid = region.grid();
    ObservabilityReport rep;
    rep.mode = mode;
    rep.final_time = final_time;

    if (mode == ObservabilityMode::Relaxed) {
        rep.required_time = unobserved_diameter(region);
        rep.time_clause = final_time > rep.required_time;
        rep.passed = rep.time_clause;
        return rep;
    }

    double sq = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
        const double far = std::max(std::abs(x0[a]), std::abs(1.0 - x0[a]));
        sq += far * far;
    }
    rep.required_time = std::sqrt(sq);
    rep.time_clause = final_time > rep.required_time;

    bool outside = true;
    if (region.removed_box()) {
        const Box& b = *region.removed_box();
        bool inside_all = true;
        for (int a = 0; a < grid.dim(); ++a)
            inside_all = inside_all && x0[a] >= b.lower[a] && x0[a] <= b.upper[a];
        outside = !inside_all;
    }
    rep.x0_outside_unobserved = outside;

    const double tol = 1e-9 * grid.h();
    bool boundary_ok = true;
    for (int axis = 0; axis < grid.dim(); ++axis) {
        for (int side = 0; side < 2; ++side) {
            FaceReport face;
            face.axis = axis;
            face.side = side;
            // nu = -e_axis on x_axis = 0 and +e_axis on x_axis = 1.
            const double normal_component = side == 0 ? x0[axis] : 1.0 - x0[axis];
            face.in_observation_set = normal_component >= 0.0;
            const int k_face = side == 0 ? 0 : grid.nodes_per_axis() - 1;
            for (std::size_t i = 0; i < grid.node_count(); ++i) {
                if (grid.multi_index(i)[axis] != k_face)
                    continue;
                if (!in_observed_closure(grid.coordinates(i), region, tol))
                    ++face.uncovered_nodes;
            }
            face.covered = face.uncovered_nodes == 0;
            if (face.in_observation_set && !face.covered)
                boundary_ok = false;
            rep.faces.push_back(face);
        }
    }
    rep.boundary_clause = boundary_ok;
    rep.passed = rep.time_clause && outside && boundary_ok;
    return rep;
}

} // namespace wisp
