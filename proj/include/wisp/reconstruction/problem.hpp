#pragma once

#include "wisp/core/field.hpp"
#include "wisp/core/region.hpp"
#include "wisp/solvers/wave_solver.hpp"

namespace wisp {

/// Everything that fixes the forward map f -> u(f)|omega: the grid, the
/// known temporal factor R sampled on it, the observation region and the
/// time-stepping scheme.
struct ProblemSetup {
    GridSpec grid;
    SpaceTimeField R;
    ObservationRegion region;
    SolverScheme scheme;

    /// Throws ConfigError unless R and region live on `grid`.
    void validate() const;

    SpaceTimeField solve(const ScalarField& f) const { return forward_solve(grid, f, R, scheme); }

    /// int_0^T R v dt for v the backward solution driven by chi_omega residual.
    ScalarField adjoint_image(const SpaceTimeField& residual) const
    {
        return apply_adjoint_operator(residual, R, region, grid, scheme);
    }
};

} // namespace wisp
