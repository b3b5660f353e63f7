#include "wisp/harness/noise.hpp"

#include "wisp/errors.hpp"

namespace wisp {

NoisyData add_noise(const SpaceTimeField& u, const ObservationRegion& region, const NoiseSpec& spec)
{
    if (!(spec.delta0 >= 0.0 && spec.delta0 < 1.0))
        throw ConfigError("noise: delta0 must lie in [0, 1)");
    require_same_grid(u.grid(), region.grid(), "add_noise");

    NoisyData out;
    out.delta = spec.delta0 * u.data().cwiseAbs().maxCoeff();
    out.u_obs = SpaceTimeField(u.grid(), u.data());
    out.u_obs.data().array().colwise() *= region.indicator().array();
    if (spec.delta0 == 0.0)
        return out;

    std::mt19937_64 gen(spec.seed);
    const auto n = static_cast<Eigen::Index>(u.grid().node_count());
    for (int j = 1; j < u.time_levels(); ++j) {
        auto s = out.u_obs.slice(j);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (region.contains(static_cast<std::size_t>(i)))
                s[i] += out.delta * uniform_symmetric(gen);
        }
    }
    return out;
}

} // namespace wisp
