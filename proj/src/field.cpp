#include "wisp/core/field.hpp"

#include "wisp/errors.hpp"

namespace wisp {

ScalarField::ScalarField(const GridSpec& grid, Eigen::VectorXd values)
    : grid_(grid), values_(std::move(values))
{
    if (static_cast<std::size_t>(values_.size()) != grid_.node_count())
        throw ConfigError("ScalarField: value count does not match the grid node count");
}

SpaceTimeField::SpaceTimeField(const GridSpec& grid, Eigen::MatrixXd data)
    : grid_(grid), data_(std::move(data))
{
    if (static_cast<std::size_t>(data_.rows()) != grid_.node_count() || data_.cols() != grid_.time_levels())
        throw ConfigError("SpaceTimeField: shape does not match the grid");
}

} // namespace wisp
