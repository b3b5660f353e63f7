#include "wisp/harness/sweep.hpp"

#include "wisp/errors.hpp"

#include <cmath>
#include <numeric>

namespace wisp {

std::optional<double> fit_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        return std::nullopt;
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 1e-24 * std::max(1.0, mx * mx)))
        return std::nullopt;
    return sxy / sxx;
}

SweepResult stability_sweep(const ExperimentConfig& base, std::span<const double> delta0_list, int repeats)
{
    if (repeats < 1)
        throw ConfigError("sweep: repeats must be >= 1");
    if (delta0_list.empty())
        throw ConfigError("sweep: at least one noise level is required");
    for (std::size_t i = 0; i < delta0_list.size(); ++i) {
        if (!(delta0_list[i] > 0.0))
            throw ConfigError("sweep: noise levels must be positive");
        if (i > 0 && delta0_list[i] < delta0_list[i - 1])
            throw ConfigError("sweep: noise levels must be nondecreasing");
    }

    RunOptions options;
    options.write_outputs = false;

    SweepResult out;
    for (const double d0 : delta0_list) {
        SweepLevel level;
        level.delta0 = d0;
        for (int r = 0; r < repeats; ++r) {
            ExperimentConfig c = base;
            c.noise.delta0 = d0;
            c.noise.seed = base.noise.seed + static_cast<std::uint64_t>(r);
            const ExperimentRun run = run_experiment(c, options);
            level.errors.push_back(run.result.error);
            level.iterations.push_back(run.result.iterations);
        }
        const double n = static_cast<double>(repeats);
        level.mean_error = std::accumulate(level.errors.begin(), level.errors.end(), 0.0) / n;
        if (repeats > 1) {
            double ss = 0.0;
            for (const double e : level.errors)
                ss += (e - level.mean_error) * (e - level.mean_error);
            level.std_error = std::sqrt(ss / (n - 1.0));
        }
        out.levels.push_back(std::move(level));
    }

    std::vector<double> lx;
    std::vector<double> ly;
    for (const auto& l : out.levels) {
        lx.push_back(std::log(l.delta0));
        ly.push_back(std::log(l.mean_error));
    }
    out.slope = fit_slope(lx, ly);
    return out;
}

} // namespace wisp
