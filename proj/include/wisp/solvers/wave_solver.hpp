#pragma once

#include "wisp/core/field.hpp"
#include "wisp/core/region.hpp"
#include "wisp/solvers/tridiagonal.hpp"

#include <vector>

namespace wisp {

/// Time discretization of u_tt = Lap u + F with homogeneous Neumann faces.
///
/// Both variants are the three-level scheme
///
///   (u+ - 2u + u-) / tau^2 = Lap_h(theta u+ + (1 - 2 theta) u + theta u-) + F,
///
/// rewritten as M (u+ - 2u + u-) = tau^2 (Lap_h u + F) with
/// M = I - theta tau^2 Lap_h. In 1D M is inverted directly; in 2D/3D it is
/// replaced by the product of one-axis factors (I - theta tau^2 D_xx)(I -
/// theta tau^2 D_yy)..., which costs one tridiagonal solve per grid line
/// and axis. The factorization error is O(tau^4) and keeps the scheme
/// unconditionally stable for theta >= 1/4.
struct SolverScheme {
    enum class Variant { ImplicitThreeLevel, Adi };

    Variant variant = Variant::ImplicitThreeLevel;
    double theta = 0.25;
};

/// Implicit three-level in 1D, ADI otherwise. Throws ConfigError when
/// theta is outside [1/4, 1/2].
SolverScheme scheme_for(const GridSpec& grid, double theta = 0.25);

/// One time step of the scheme on a fixed grid. Exposed for stability and
/// residual tests; forward_solve and adjoint_solve are built on it.
class WaveStepper {
public:
    WaveStepper(const GridSpec& grid, const SolverScheme& scheme);

    const GridSpec& grid() const noexcept { return grid_; }

    /// Neumann Laplacian with mirrored ghost nodes.
    void apply_laplacian(const Eigen::VectorXd& u, Eigen::VectorXd& out) const;

    /// u(tau) from zero initial data: tau^2 / 2 * F(., 0).
    void start(const Eigen::VectorXd& source, Eigen::VectorXd& next) const;

    /// next = 2 cur - prev + M^{-1} tau^2 (Lap_h cur + source).
    void advance(const Eigen::VectorXd& prev, const Eigen::VectorXd& cur, const Eigen::VectorXd& source,
                 Eigen::VectorXd& next) const;

    /// Applies M^{-1} in place (the per-axis sweeps).
    void solve_implicit(Eigen::VectorXd& rhs) const;

    /// Applies M (the product of the axis factors), for residual checks.
    Eigen::VectorXd apply_implicit(const Eigen::VectorXd& x) const;

private:
    GridSpec grid_;
    SolverScheme scheme_;
    TridiagonalSystem<double> line_;
    mutable Eigen::VectorXd work_;
};

/// Discrete u(f): u_tt = Lap u + f R, zero initial data, Neumann faces.
SpaceTimeField forward_solve(const GridSpec& grid, const ScalarField& f, const SpaceTimeField& R,
                             const SolverScheme& scheme);

/// Discrete v solving v_tt = Lap v + chi_omega residual with
/// v(., T) = v_t(., T) = 0, marched backward from t = T.
SpaceTimeField adjoint_solve(const GridSpec& grid, const SpaceTimeField& residual, const ObservationRegion& region,
                             const SolverScheme& scheme);

/// A f = u(f) restricted to omega x (0,T); zero off omega.
SpaceTimeField apply_forward_operator(const ScalarField& f, const SpaceTimeField& R, const ObservationRegion& region,
                                      const GridSpec& grid, const SolverScheme& scheme);

/// A* r = int_0^T R v dt with v = adjoint_solve(r), trapezoidal in time.
ScalarField apply_adjoint_operator(const SpaceTimeField& residual, const SpaceTimeField& R,
                                   const ObservationRegion& region, const GridSpec& grid, const SolverScheme& scheme);

/// Zeroes every slice outside omega.
SpaceTimeField restrict_to(const SpaceTimeField& u, const ObservationRegion& region);

} // namespace wisp
