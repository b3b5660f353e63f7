#include "wisp/reconstruction/norm_estimate.hpp"

#include "wisp/core/quadrature.hpp"
#include "wisp/errors.hpp"

#include <cmath>
#include <random>

namespace wisp {

NormEstimate estimate_norm_bound(const ProblemSetup& setup, int iterations, std::uint64_t seed)
{
    if (iterations < 1)
        throw ConfigError("estimate_norm_bound: iterations must be >= 1");
    setup.validate();

    std::mt19937_64 gen(seed);
    ScalarField x(setup.grid);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x[i] = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;

    NormEstimate est;
    for (int k = 0; k < iterations; ++k) {
        const double nx = l2_norm(x);
        if (!(nx > 0.0))
            break;
        x.values() /= nx;
        const SpaceTimeField ax = restrict_to(setup.solve(x), setup.region);
        const double q = space_time_norm_sq(ax, setup.region);
        est.rayleigh.push_back(q);
        est.value = std::max(est.value, q);
        if (q == 0.0)
            break;
        x = setup.adjoint_image(ax);
        if (!x.all_finite())
            throw NumericalError("estimate_norm_bound: non-finite iterate");
    }
    return est;
}

} // namespace wisp
