#pragma once

#include "wisp/reconstruction/problem.hpp"

#include <cstdint>
#include <vector>

namespace wisp {

struct NormEstimate {
    double value = 0.0;                 ///< estimate of ||A||^2
    std::vector<double> rayleigh;       ///< ||A x_k||^2 / ||x_k||^2 per iteration
};

/// Power iteration on f -> A*(A f) in the discrete L2 inner products.
/// Each iteration costs one forward and one backward solve. The Rayleigh
/// quotients are lower bounds for ||A||^2; the start vector is drawn from
/// a seeded generator.
NormEstimate estimate_norm_bound(const ProblemSetup& setup, int iterations, std::uint64_t seed = 20160101);

} // namespace wisp
