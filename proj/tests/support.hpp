#pragma once

#include "wisp/core/function_spec.hpp"
#include "wisp/core/quadrature.hpp"
#include "wisp/reconstruction/problem.hpp"
#include "wisp/solvers/wave_solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>

#include <random>

namespace wisp::testing {

inline ProblemSetup setup_1d(int nodes, double T, const char* R, std::optional<Box> removed = Box{{0.1, 0, 0}, {0.9, 0, 0}})
{
    const double tau = T / std::round(T * (nodes - 1));
    const GridSpec g = build_grid(1, nodes, tau, T);
    ObservationRegion region = removed ? ObservationRegion(g, *removed) : ObservationRegion::whole(g);
    return ProblemSetup{g, sample_space_time(FunctionSpec::parse(R), g), region, scheme_for(g)};
}

inline ScalarField random_field(const GridSpec& g, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd v(static_cast<Eigen::Index>(g.node_count()));
    for (auto& x : v)
        x = u(gen);
    return ScalarField(g, v);
}

inline SpaceTimeField random_space_time(const GridSpec& g, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(g.node_count()), g.time_levels());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            m(i, j) = u(gen);
    return SpaceTimeField(g, m);
}

/// Smooth random field: a few cosine modes with random amplitudes.
inline ScalarField smooth_random_field(const GridSpec& g, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a0 = u(gen), a1 = u(gen), a2 = u(gen), a3 = u(gen);
    Eigen::VectorXd v(static_cast<Eigen::Index>(g.node_count()));
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto x = g.coordinates(i);
        double s = a0;
        for (int a = 0; a < g.dim(); ++a)
            s += a1 * std::cos(M_PI * x[a]) + a2 * std::cos(2 * M_PI * x[a]) + a3 * x[a] * x[a];
        v[static_cast<Eigen::Index>(i)] = s;
    }
    return ScalarField(g, v);
}

/// Largest singular value squared of A : L2(Omega) -> L2(omega x (0,T)),
/// from the explicitly assembled matrix. Columns are A applied to nodal
/// basis fields; the trapezoid weights enter as D^{1/2} A W^{-1/2}.
inline double dense_norm_squared(const ProblemSetup& s)
{
    const GridSpec& g = s.grid;
    const Eigen::Index n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::VectorXd ws = spatial_weights(g);
    const Eigen::VectorXd wt = time_weights(g);
    const Eigen::VectorXd wo = s.region.weights();
    Eigen::MatrixXd B(n * g.time_levels(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
        ScalarField e(g);
        e[i] = 1.0;
        const SpaceTimeField u = s.solve(e);
        for (int j = 0; j < g.time_levels(); ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                B(j * n + k, i) = std::sqrt(wo[k] * wt[j]) * u.data()(k, j) / std::sqrt(ws[i]);
    }
    const Eigen::MatrixXd BtB = B.transpose() * B;
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(BtB).eigenvalues().maxCoeff();
}

} // namespace wisp::testing
