#include "wisp/geometry/carleman.hpp"

#include "wisp/errors.hpp"

#include <cmath>

namespace wisp {

WeightFields eval_weights(const WeightSpec& spec, const GridSpec& grid)
{
    if (!(spec.beta > 0.0 && spec.beta < 1.0))
        throw ConfigError("weights: beta must lie in (0, 1)");
    if (!(spec.lambda > 0.0))
        throw ConfigError("weights: lambda must be positive");

    const ScalarField d = sample(spec.d, grid);
    if (!(d.values().minCoeff() > 0.0))
        throw ConfigError("weights: d must be positive on every node");

    const int half = grid.time_levels() - 1;
    WeightFields w;
    w.grid = grid;
    w.psi.resize(d.size(), 2 * half + 1);
    for (int j = 0; j <= 2 * half; ++j) {
        const double t = (j - half) * grid.tau();
        w.psi.col(j) = d.values().array() - spec.beta * t * t;
    }
    w.phi = w.psi.unaryExpr([lambda = spec.lambda](double p) { return std::exp(lambda * p); });
    return w;
}

LevelSetMasks level_sets(const WeightFields& weights, double delta)
{
    if (!(delta >= 0.0))
        throw ConfigError("level_sets: delta must be >= 0");
    LevelSetMasks m;
    m.delta = delta;
    m.q_mask = (weights.psi.array() > delta).matrix();
    m.omega_mask = m.q_mask.col(weights.zero_level());
    return m;
}

} // namespace wisp
