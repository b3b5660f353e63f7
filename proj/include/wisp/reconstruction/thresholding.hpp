#pragma once

#include "wisp/reconstruction/problem.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wisp {

/// Tuning knobs of the iterative thresholding loop.
struct ReconstructionParams {
    double alpha = 0.0;        ///< Tikhonov weight, > 0
    double K = 0.0;            ///< tuning weight, > 0; convergent for K >= ||A||^2
    double epsilon = 0.0;      ///< stop when ||f_{m+1} - f_m|| / ||f_m|| <= epsilon
    ScalarField f0;            ///< initial guess
    int max_iterations = 1000;

    void validate(const GridSpec& grid) const;
};

struct IterationRecord {
    int index = 0;                    ///< m
    double objective = 0.0;           ///< J(f_m)
    double relative_change = 0.0;     ///< ||f_{m+1} - f_m|| / ||f_m||
    std::optional<double> relative_error;  ///< ||f_m - f_true|| / ||f_true||
    double seconds = 0.0;             ///< wall time since the loop started

    /// Equality on the numerical content; wall time is ignored.
    bool same_values(const IterationRecord& other) const;
};

struct IterationLog {
    std::vector<IterationRecord> records;
};

enum class StopReason { Converged, MaxIterations };

const char* to_string(StopReason reason);

struct ReconstructionResult {
    ScalarField f;              ///< f_M
    IterationLog log;
    StopReason stop = StopReason::MaxIterations;
    int iterations = 0;         ///< M
    double final_objective = 0.0;
    std::optional<double> final_error;
};

/// J(f) = ||u(f) - u_obs||^2 over omega x (0,T) + alpha ||f||^2 over Omega.
double objective(const ProblemSetup& setup, const ScalarField& f, const SpaceTimeField& u_obs, double alpha);

/// J evaluated from an already computed state u = u(f).
double objective_from_state(const ProblemSetup& setup, const SpaceTimeField& u, const ScalarField& f,
                            const SpaceTimeField& u_obs, double alpha);

/// 2 (int_0^T R v(f) dt + alpha f), the L2 representer of J'(f).
ScalarField gradient(const ProblemSetup& setup, const ScalarField& f, const SpaceTimeField& u_obs, double alpha);

/// f_{m+1} = K/(K+alpha) f_m - 1/(K+alpha) int_0^T R v(f_m) dt.
ScalarField iterate_step(const ProblemSetup& setup, const ScalarField& f_m, const SpaceTimeField& u_obs,
                         const ReconstructionParams& params);

/// Same update from a precomputed adjoint image int_0^T R v(f_m) dt.
ScalarField thresholding_update(const ScalarField& f_m, const ScalarField& adjoint_image, double alpha, double K);

/// J^s(f, g) = J(f) + K ||f - g||^2 - ||u(f) - u(g)||^2 over omega x (0,T).
double surrogate(const ProblemSetup& setup, const ScalarField& f, const ScalarField& g,
                 const SpaceTimeField& u_obs, double alpha, double K);

/// Optional per-iteration hook (progress reporting).
using IterationObserver = std::function<void(const IterationRecord&)>;

/// The thresholding loop from params.f0 until the relative-change rule or
/// params.max_iterations. One forward and one backward solve per step.
/// Throws DivergenceError with the iteration index on a non-finite iterate.
ReconstructionResult run_reconstruction(const ProblemSetup& setup, const SpaceTimeField& u_obs,
                                        const ReconstructionParams& params,
                                        const std::optional<ScalarField>& f_true = std::nullopt,
                                        const IterationObserver& observer = {});

/// ||f_M - f_true|| / ||f_true|| (trapezoidal L2 over Omega). Throws
/// ConfigError if f_true has zero norm.
double relative_error(const ScalarField& f, const ScalarField& f_true);

} // namespace wisp
