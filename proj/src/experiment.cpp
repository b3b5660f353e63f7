#include "wisp/harness/experiment.hpp"

#include "wisp/errors.hpp"
#include "wisp/harness/output.hpp"
#include "wisp/reconstruction/norm_estimate.hpp"

#include <iostream>

namespace wisp {

bool ExperimentResult::same_values(const ExperimentResult& o) const
{
    return name == o.name && iterations == o.iterations && error == o.error && final_objective == o.final_objective
        && stop == o.stop && delta == o.delta && alpha == o.alpha && epsilon == o.epsilon && K == o.K
        && norm_bound == o.norm_bound;
}

ProblemSetup make_setup(const ExperimentConfig& config)
{
    const GridSpec grid = config.grid();
    ProblemSetup setup{grid, sample_space_time(config.R, grid), config.region(grid), scheme_for(grid, config.theta)};
    setup.validate();
    return setup;
}

ExperimentRun run_experiment(const ExperimentConfig& config, const RunOptions& options)
{
    const ProblemSetup setup = make_setup(config);
    const GridSpec& grid = setup.grid;

    ExperimentRun run;
    ExperimentResult& res = run.result;
    res.name = config.name;
    res.geometry = check_observability({0.0, 0.0, 0.0}, setup.region, config.final_time, ObservabilityMode::Relaxed);
    if (!res.geometry.passed)
        std::cerr << "warning: " << config.name << ": T = " << config.final_time
                  << " does not exceed diam(Omega \\ omega) = " << res.geometry.required_time << "\n";

    run.f_true = sample(config.f_true, grid);
    const SpaceTimeField u_true = setup.solve(run.f_true);
    const NoisyData data = add_noise(u_true, setup.region, config.noise);

    ReconstructionParams params;
    params.K = config.K;
    params.alpha = config.alpha.value_or(default_alpha(config.noise.delta0, data.delta));
    params.epsilon = config.epsilon.value_or(default_epsilon(config.noise.delta0));
    params.f0 = sample(config.f0, grid);
    params.max_iterations = config.max_iterations;

    res.delta = data.delta;
    res.alpha = params.alpha;
    res.epsilon = params.epsilon;
    res.K = params.K;
    if (options.norm_iterations > 0)
        res.norm_bound = estimate_norm_bound(setup, options.norm_iterations).value;

    try {
        run.reconstruction = run_reconstruction(setup, data.u_obs, params, run.f_true, options.observer);
    } catch (const DivergenceError& e) {
        throw DivergenceError(e.iteration(), config.name + ": reconstruction diverged (K = " + std::to_string(config.K)
                                                 + ")");
    } catch (const NumericalError& e) {
        throw NumericalError(config.name + ": " + e.what());
    }

    const ReconstructionResult& rec = run.reconstruction;
    res.iterations = rec.iterations;
    res.error = rec.final_error.value_or(0.0);
    res.final_objective = rec.final_objective;
    res.stop = rec.stop;
    res.seconds = rec.log.records.empty() ? 0.0 : rec.log.records.back().seconds;

    if (options.write_outputs && config.output_dir) {
        res.artifacts = write_outputs(*config.output_dir, config, res, rec.log, config.write_fields ? &rec.f : nullptr,
                                      config.write_fields ? &run.f_true : nullptr);
    }
    return run;
}

} // namespace wisp
