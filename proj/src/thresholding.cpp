#include "wisp/reconstruction/thresholding.hpp"

#include "wisp/core/quadrature.hpp"
#include "wisp/errors.hpp"

#include <chrono>
#include <cmath>

namespace wisp {

void ProblemSetup::validate() const
{
    require_same_grid(grid, R.grid(), "problem setup (R)");
    require_same_grid(grid, region.grid(), "problem setup (region)");
}

void ReconstructionParams::validate(const GridSpec& grid) const
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ConfigError("reconstruction: alpha must be positive");
    if (!(K > 0.0) || !std::isfinite(K))
        throw ConfigError("reconstruction: K must be positive");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw ConfigError("reconstruction: epsilon must be positive");
    if (max_iterations < 1)
        throw ConfigError("reconstruction: max_iterations must be >= 1");
    require_same_grid(grid, f0.grid(), "reconstruction (f0)");
    if (!f0.all_finite())
        throw ConfigError("reconstruction: f0 is not finite");
}

bool IterationRecord::same_values(const IterationRecord& o) const
{
    return index == o.index && objective == o.objective && relative_change == o.relative_change
        && relative_error == o.relative_error;
}

const char* to_string(StopReason reason)
{
    switch (reason) {
    case StopReason::Converged: return "converged";
    case StopReason::MaxIterations: return "max_iterations";
    }
    return "unknown";
}

double objective_from_state(const ProblemSetup& setup, const SpaceTimeField& u, const ScalarField& f,
                            const SpaceTimeField& u_obs, double alpha)
{
    require_same_grid(setup.grid, u_obs.grid(), "objective (u_obs)");
    require_same_grid(setup.grid, f.grid(), "objective (f)");
    const SpaceTimeField diff(setup.grid, u.data() - u_obs.data());
    const double fit = space_time_norm_sq(diff, setup.region);
    const double reg = inner_product(f, f);
    return fit + alpha * reg;
}

double objective(const ProblemSetup& setup, const ScalarField& f, const SpaceTimeField& u_obs, double alpha)
{
    return objective_from_state(setup, setup.solve(f), f, u_obs, alpha);
}

ScalarField gradient(const ProblemSetup& setup, const ScalarField& f, const SpaceTimeField& u_obs, double alpha)
{
    require_same_grid(setup.grid, u_obs.grid(), "gradient (u_obs)");
    const SpaceTimeField u = setup.solve(f);
    const SpaceTimeField residual(setup.grid, u.data() - u_obs.data());
    const ScalarField image = setup.adjoint_image(residual);
    return ScalarField(setup.grid, 2.0 * (image.values() + alpha * f.values()));
}

ScalarField thresholding_update(const ScalarField& f_m, const ScalarField& adjoint_image, double alpha, double K)
{
    require_same_grid(f_m.grid(), adjoint_image.grid(), "thresholding update");
    return ScalarField(f_m.grid(), (K / (K + alpha)) * f_m.values() - (1.0 / (K + alpha)) * adjoint_image.values());
}

ScalarField iterate_step(const ProblemSetup& setup, const ScalarField& f_m, const SpaceTimeField& u_obs,
                         const ReconstructionParams& params)
{
    const SpaceTimeField u = setup.solve(f_m);
    const SpaceTimeField residual(setup.grid, u.data() - u_obs.data());
    return thresholding_update(f_m, setup.adjoint_image(residual), params.alpha, params.K);
}

double surrogate(const ProblemSetup& setup, const ScalarField& f, const ScalarField& g,
                 const SpaceTimeField& u_obs, double alpha, double K)
{
    const SpaceTimeField uf = setup.solve(f);
    const SpaceTimeField ug = setup.solve(g);
    const ScalarField step(setup.grid, f.values() - g.values());
    const SpaceTimeField du(setup.grid, uf.data() - ug.data());
    return objective_from_state(setup, uf, f, u_obs, alpha) + K * inner_product(step, step)
        - space_time_norm_sq(du, setup.region);
}

double relative_error(const ScalarField& f, const ScalarField& f_true)
{
    require_same_grid(f.grid(), f_true.grid(), "relative_error");
    const double denom = l2_norm(f_true);
    if (!(denom > 0.0))
        throw ConfigError("relative_error: reference field has zero norm");
    return l2_norm(ScalarField(f.grid(), f.values() - f_true.values())) / denom;
}

ReconstructionResult run_reconstruction(const ProblemSetup& setup, const SpaceTimeField& u_obs,
                                        const ReconstructionParams& params,
                                        const std::optional<ScalarField>& f_true,
                                        const IterationObserver& observer)
{
    setup.validate();
    params.validate(setup.grid);
    require_same_grid(setup.grid, u_obs.grid(), "run_reconstruction (u_obs)");
    if (f_true)
        require_same_grid(setup.grid, f_true->grid(), "run_reconstruction (f_true)");

    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    const double small_norm = 1e-14 * std::sqrt(static_cast<double>(setup.grid.node_count()));

    ReconstructionResult result;
    ScalarField f = params.f0;
    int m = 0;
    while (m < params.max_iterations) {
        const SpaceTimeField u = setup.solve(f);
        const double J = objective_from_state(setup, u, f, u_obs, params.alpha);
        const SpaceTimeField residual(setup.grid, u.data() - u_obs.data());
        ScalarField next = thresholding_update(f, setup.adjoint_image(residual), params.alpha, params.K);
        if (!next.all_finite() || !std::isfinite(J))
            throw DivergenceError(m, "non-finite iterate");

        const double norm_f = l2_norm(f);
        const double change = l2_norm(ScalarField(setup.grid, next.values() - f.values()));
        const double rel = norm_f < small_norm ? change : change / norm_f;

        IterationRecord rec;
        rec.index = m;
        rec.objective = J;
        rec.relative_change = rel;
        if (f_true)
            rec.relative_error = relative_error(f, *f_true);
        rec.seconds = std::chrono::duration<double>(clock::now() - started).count();
        result.log.records.push_back(rec);
        if (observer)
            observer(rec);

        f = std::move(next);
        ++m;
        if (rel <= params.epsilon) {
            result.stop = StopReason::Converged;
            break;
        }
    }

    result.iterations = m;
    result.final_objective = objective(setup, f, u_obs, params.alpha);
    if (f_true)
        result.final_error = relative_error(f, *f_true);
    result.f = std::move(f);
    return result;
}

} // namespace wisp
