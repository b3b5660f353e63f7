#include "wisp/core/quadrature.hpp"

#include "wisp/errors.hpp"

#include <cmath>

namespace wisp {

Eigen::VectorXd spatial_weights(const GridSpec& grid)
{
    const Eigen::VectorXd line = trapezoid_weights<double>(grid.nodes_per_axis(), grid.h());
    const auto n = static_cast<Eigen::Index>(grid.node_count());
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = grid.multi_index(static_cast<std::size_t>(i));
        double wi = 1.0;
        for (int a = 0; a < grid.dim(); ++a)
            wi *= line[k[a]];
        w[i] = wi;
    }
    return w;
}

Eigen::VectorXd time_weights(const GridSpec& grid)
{
    return trapezoid_weights<double>(grid.time_levels(), grid.tau());
}

double inner_product(const ScalarField& a, const ScalarField& b)
{
    require_same_grid(a.grid(), b.grid(), "inner_product");
    return weighted_dot(a.values(), b.values(), spatial_weights(a.grid()));
}

double l2_norm(const ScalarField& field)
{
    return std::sqrt(weighted_dot(field.values(), field.values(), spatial_weights(field.grid())));
}

double l2_norm(const ScalarField& field, const ObservationRegion& region)
{
    require_same_grid(field.grid(), region.grid(), "l2_norm");
    return std::sqrt(weighted_dot(field.values(), field.values(), region.weights()));
}

double space_time_inner(const SpaceTimeField& a, const SpaceTimeField& b, const ObservationRegion& region)
{
    require_same_grid(a.grid(), b.grid(), "space_time_inner");
    require_same_grid(a.grid(), region.grid(), "space_time_inner");
    const Eigen::VectorXd wt = time_weights(a.grid());
    const Eigen::VectorXd per_level =
        (a.data().array() * b.data().array()).matrix().transpose() * region.weights();
    return per_level.dot(wt);
}

double space_time_norm_sq(const SpaceTimeField& a, const ObservationRegion& region)
{
    return space_time_inner(a, a, region);
}

ScalarField time_integral_of_product(const SpaceTimeField& a, const SpaceTimeField& b)
{
    require_same_grid(a.grid(), b.grid(), "time_integral_of_product");
    const Eigen::VectorXd wt = time_weights(a.grid());
    return ScalarField(a.grid(), (a.data().array() * b.data().array()).matrix() * wt);
}

} // namespace wisp
