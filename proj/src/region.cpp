#include "wisp/core/region.hpp"

#include "wisp/core/quadrature.hpp"
#include "wisp/errors.hpp"

#include <cmath>

namespace wisp {

double Box::diagonal(int dim) const
{
    double sq = 0.0;
    for (int a = 0; a < dim; ++a)
        sq += (upper[a] - lower[a]) * (upper[a] - lower[a]);
    return std::sqrt(sq);
}

ObservationRegion::ObservationRegion(const GridSpec& grid, const Box& removed)
    : grid_(grid), removed_(removed)
{
    for (int a = 0; a < grid.dim(); ++a) {
        if (!(removed.lower[a] >= 0.0 && removed.upper[a] <= 1.0 && removed.lower[a] <= removed.upper[a]))
            throw ConfigError("observation region: removed box must satisfy 0 <= lower <= upper <= 1 on every axis");
    }

    // Nodes within this distance of a face count as on the face.
    const double tol = 1e-9 * grid.h();
    const auto n = static_cast<Eigen::Index>(grid.node_count());
    indicator_ = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto x = grid.coordinates(static_cast<std::size_t>(i));
        bool outside = false;
        for (int a = 0; a < grid.dim(); ++a)
            outside = outside || x[a] < removed.lower[a] - tol || x[a] > removed.upper[a] + tol;
        indicator_[i] = outside ? 1.0 : 0.0;
    }
    weights_ = spatial_weights(grid).cwiseProduct(indicator_);
}

ObservationRegion ObservationRegion::whole(const GridSpec& grid)
{
    ObservationRegion r;
    r.grid_ = grid;
    r.indicator_ = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(grid.node_count()));
    r.weights_ = spatial_weights(grid);
    return r;
}

std::size_t ObservationRegion::observed_count() const
{
    return static_cast<std::size_t>(indicator_.sum());
}

} // namespace wisp
