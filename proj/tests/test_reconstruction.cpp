#include "support.hpp"

#include "wisp/errors.hpp"
#include "wisp/harness/noise.hpp"
#include "wisp/reconstruction/norm_estimate.hpp"
#include "wisp/reconstruction/thresholding.hpp"

#include <doctest.h>

#include <cmath>

using namespace wisp;
using wisp::testing::random_field;
using wisp::testing::random_space_time;
using wisp::testing::setup_1d;
using wisp::testing::smooth_random_field;

namespace {

struct Table1Data {
    ProblemSetup setup;
    ScalarField f_true;
    NoisyData data;
};

Table1Data table1_data(int nodes, std::uint64_t seed = 1)
{
    ProblemSetup s = setup_1d(nodes, 1.0, "x+t+1");
    ScalarField f_true = sample(FunctionSpec::parse("cos(pi*x)+1"), s.grid);
    NoisyData d = add_noise(s.solve(f_true), s.region, NoiseSpec{0.01, seed});
    return {std::move(s), std::move(f_true), std::move(d)};
}

ReconstructionParams table1_params(const Table1Data& t)
{
    ReconstructionParams p;
    p.K = 0.02;
    p.alpha = 1e-3 * t.data.delta;
    p.epsilon = 1e-4;
    p.f0 = ScalarField::constant(t.setup.grid, 1.0);
    return p;
}

} // namespace

TEST_SUITE("reconstruction") {

TEST_CASE("objective: exact data gives exactly zero")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    const ScalarField f = smooth_random_field(s.grid, 4);
    CHECK(objective(s, f, s.solve(f), 0.0) == 0.0);
}

TEST_CASE("objective: unit data on omega measures |omega| T")
{
    const ProblemSetup s = setup_1d(101, 1.0, "x+t+1");
    const SpaceTimeField ones(s.grid, Eigen::MatrixXd::Ones(101, s.grid.time_levels()));
    const double J = objective(s, ScalarField(s.grid), ones, 0.0);
    // omega = [0, 0.1) u (0.9, 1]; face nodes are unobserved, so the
    // trapezoid misses one half-cell per face.
    CHECK(std::abs(J - 0.2) <= 1.5 * s.grid.h());
    CHECK(J == doctest::Approx(0.19).epsilon(1e-12));
}

TEST_CASE("objective: vanishing data term leaves alpha ||f||^2")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    const ScalarField one = ScalarField::constant(s.grid, 1.0);
    CHECK(objective(s, one, s.solve(one), 0.37) == doctest::Approx(0.37).epsilon(1e-14));
}

TEST_CASE("gradient: zero at zero residual")
{
    const ProblemSetup s = setup_1d(51, 1.0, "2+pi^2*t^2");
    const ScalarField f = smooth_random_field(s.grid, 9);
    CHECK(gradient(s, f, s.solve(f), 0.0).values().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gradient: central differences of J along smooth directions")
{
    for (const int N : {51, 101}) {
        const Table1Data t = table1_data(N);
        const double alpha = 1e-3 * t.data.delta;
        const ScalarField f = ScalarField::constant(t.setup.grid, 1.0);
        const ScalarField grad = gradient(t.setup, f, t.data.u_obs, alpha);
        for (std::uint64_t k = 0; k < 3; ++k) {
            const ScalarField g = smooth_random_field(t.setup.grid, 100 + k);
            const double eps = 1e-4 * l2_norm(f) / l2_norm(g);
            const double jp = objective(t.setup, ScalarField(t.setup.grid, f.values() + eps * g.values()), t.data.u_obs, alpha);
            const double jm = objective(t.setup, ScalarField(t.setup.grid, f.values() - eps * g.values()), t.data.u_obs, alpha);
            const double fd = (jp - jm) / (2.0 * eps);
            const double an = inner_product(grad, g);
            CHECK(std::abs(an - fd) <= 0.02 * std::abs(fd));
        }
    }
}

TEST_CASE("gradient: 2D central differences")
{
    const GridSpec g = build_grid(2, 21, 0.05, 1.3);
    const ProblemSetup s{g, sample_space_time(FunctionSpec::parse("5+pi^2*t^2"), g),
                         ObservationRegion(g, Box{{0.1, 0.1, 0}, {0.9, 0.9, 0}}), scheme_for(g)};
    const ScalarField f_true = sample(FunctionSpec::parse("cos(pi*x1)*cos(pi*x2)/2+1"), g);
    const NoisyData d = add_noise(s.solve(f_true), s.region, NoiseSpec{0.05, 3});
    const ScalarField f = ScalarField::constant(g, 1.0);
    const double alpha = 1e-3 * d.delta;
    const ScalarField grad = gradient(s, f, d.u_obs, alpha);
    const ScalarField dir = smooth_random_field(g, 77);
    const double eps = 1e-4 * l2_norm(f) / l2_norm(dir);
    const double fd = (objective(s, ScalarField(g, f.values() + eps * dir.values()), d.u_obs, alpha)
                       - objective(s, ScalarField(g, f.values() - eps * dir.values()), d.u_obs, alpha))
        / (2 * eps);
    CHECK(std::abs(inner_product(grad, dir) - fd) <= 0.02 * std::abs(fd));
}

TEST_CASE("iterate step: zero residual shrinks by K/(K+alpha)")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    ReconstructionParams p;
    p.K = 0.02;
    p.alpha = 0.005;
    p.epsilon = 1e-3;
    const ScalarField f = smooth_random_field(s.grid, 12);
    p.f0 = f;
    const ScalarField next = iterate_step(s, f, s.solve(f), p);
    CHECK(next.values() == ((p.K / (p.K + p.alpha)) * f.values()).eval());
}

TEST_CASE("iterate step: Euler-equation solutions are fixed points")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    const double alpha = 0.01;
    // f* = A* r / alpha and u_obs = u(f*) + r make the Euler residual
    // A*(u(f*) - u_obs) + alpha f* vanish.
    const SpaceTimeField r = restrict_to(random_space_time(s.grid, 44), s.region);
    const ScalarField f_star(s.grid, s.adjoint_image(r).values() / alpha);
    const SpaceTimeField u_obs(s.grid, s.solve(f_star).data() + r.data());
    ReconstructionParams p;
    p.K = 0.02;
    p.alpha = alpha;
    p.epsilon = 1e-3;
    p.f0 = f_star;
    const ScalarField next = iterate_step(s, f_star, u_obs, p);
    CHECK((next.values() - f_star.values()).norm() <= 1e-10 * f_star.values().norm());
    CHECK(gradient(s, f_star, u_obs, alpha).values().norm() <= 1e-10 * f_star.values().norm());
}

TEST_CASE("iterate step: first Table-1 step decreases J")
{
    const Table1Data t = table1_data(101);
    const ReconstructionParams p = table1_params(t);
    const ScalarField f1 = iterate_step(t.setup, p.f0, t.data.u_obs, p);
    CHECK(objective(t.setup, f1, t.data.u_obs, p.alpha) <= objective(t.setup, p.f0, t.data.u_obs, p.alpha));
}

TEST_CASE("surrogate: the update minimizes J^s(., f_m)")
{
    // The discrete J^s is convex in f when K + alpha exceeds ||A||^2.
    const Table1Data t = table1_data(51);
    ReconstructionParams p = table1_params(t);
    const double normA = estimate_norm_bound(t.setup, 30).value;
    p.K = 1.2 * normA;
    const ScalarField g = p.f0;
    const ScalarField f1 = iterate_step(t.setup, g, t.data.u_obs, p);
    const double best = surrogate(t.setup, f1, g, t.data.u_obs, p.alpha, p.K);
    CHECK(surrogate(t.setup, g, g, t.data.u_obs, p.alpha, p.K) == doctest::Approx(objective(t.setup, g, t.data.u_obs, p.alpha)));
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> eta(0.005, 0.05);
    for (int k = 0; k < 20; ++k) {
        const ScalarField dir = smooth_random_field(t.setup.grid, 500 + static_cast<std::uint64_t>(k));
        const double step = eta(gen) * l2_norm(f1) / l2_norm(dir);
        const ScalarField other(t.setup.grid, f1.values() + step * dir.values());
        CHECK(surrogate(t.setup, other, g, t.data.u_obs, p.alpha, p.K) > best);
    }
}

TEST_CASE("run: J is nonincreasing on the Table-1 configuration")
{
    const Table1Data t = table1_data(101);
    ReconstructionParams p = table1_params(t);
    p.epsilon = 1e-4;
    const ReconstructionResult res = run_reconstruction(t.setup, t.data.u_obs, p, t.f_true);
    REQUIRE(res.log.records.size() >= 2);
    for (std::size_t m = 1; m < res.log.records.size(); ++m)
        CHECK(res.log.records[m].objective <= res.log.records[m - 1].objective);
    CHECK(res.final_objective <= res.log.records.back().objective);
    for (std::size_t m = 0; m < res.log.records.size(); ++m)
        CHECK(res.log.records[m].index == static_cast<int>(m));
}

TEST_CASE("run: Euler residual at convergence on noiseless data")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    const ScalarField f_true = sample(FunctionSpec::parse("cos(pi*x)+1"), s.grid);
    const SpaceTimeField u_obs = restrict_to(s.solve(f_true), s.region);
    ReconstructionParams p;
    p.K = 0.02;
    p.alpha = 0.02;
    p.epsilon = 1e-4;
    p.f0 = ScalarField::constant(s.grid, 1.0);
    const ReconstructionResult res = run_reconstruction(s, u_obs, p);
    REQUIRE(res.stop == StopReason::Converged);
    const SpaceTimeField rM(s.grid, s.solve(res.f).data() - u_obs.data());
    const ScalarField image = s.adjoint_image(rM);
    const double num = l2_norm(ScalarField(s.grid, image.values() + p.alpha * res.f.values()));
    const double den = p.alpha * l2_norm(res.f) + l2_norm(image);
    CHECK(num / den <= 10.0 * p.epsilon);
}

TEST_CASE("run: noiseless data from f0 stops after one step")
{
    const ProblemSetup s = setup_1d(51, 1.0, "x+t+1");
    ReconstructionParams p;
    p.K = 0.02;
    p.alpha = 1e-12;
    p.epsilon = 1e-6;
    p.f0 = sample(FunctionSpec::parse("cos(pi*x)+1"), s.grid);
    const ReconstructionResult res = run_reconstruction(s, s.solve(p.f0), p, p.f0);
    CHECK(res.iterations == 1);
    CHECK(res.stop == StopReason::Converged);
    CHECK(res.log.records[0].relative_change < p.epsilon);
    CHECK(*res.final_error < 10 * p.epsilon);
}

TEST_CASE("run: zero initial guess uses absolute change")
{
    const ProblemSetup s = setup_1d(21, 1.0, "x+t+1");
    ReconstructionParams p;
    p.K = 0.5;
    p.alpha = 1e-3;
    p.epsilon = 1e-3;
    p.max_iterations = 3;
    p.f0 = ScalarField(s.grid);
    const ScalarField f_true = ScalarField::constant(s.grid, 1.0);
    const SpaceTimeField u_obs = s.solve(f_true);
    const ReconstructionResult res = run_reconstruction(s, u_obs, p);
    REQUIRE(!res.log.records.empty());
    const ScalarField f1 = iterate_step(s, p.f0, u_obs, p);
    CHECK(res.log.records[0].relative_change == doctest::Approx(l2_norm(f1)));
    CHECK(std::isfinite(res.log.records[0].relative_change));
}

TEST_CASE("run: iteration cap is reported")
{
    const Table1Data t = table1_data(51);
    ReconstructionParams p = table1_params(t);
    p.max_iterations = 4;
    p.epsilon = 1e-12;
    const ReconstructionResult res = run_reconstruction(t.setup, t.data.u_obs, p);
    CHECK(res.iterations == 4);
    CHECK(res.stop == StopReason::MaxIterations);
    CHECK(res.log.records.size() == 4);
    CHECK_FALSE(res.final_error.has_value());
}

TEST_CASE("run: a K far below ||A||^2 diverges with the iteration index")
{
    const Table1Data t = table1_data(51);
    ReconstructionParams p = table1_params(t);
    p.K = 1e-6;
    p.alpha = 1e-9;
    p.epsilon = 1e-12;
    int where = -1;
    try {
        run_reconstruction(t.setup, t.data.u_obs, p);
    } catch (const DivergenceError& e) {
        where = e.iteration();
    }
    CHECK(where > 0);
    CHECK(where < p.max_iterations);
}

TEST_CASE("run: identical inputs give bit-identical logs")
{
    const Table1Data a = table1_data(51, 8);
    const Table1Data b = table1_data(51, 8);
    const ReconstructionResult ra = run_reconstruction(a.setup, a.data.u_obs, table1_params(a), a.f_true);
    const ReconstructionResult rb = run_reconstruction(b.setup, b.data.u_obs, table1_params(b), b.f_true);
    REQUIRE(ra.log.records.size() == rb.log.records.size());
    for (std::size_t m = 0; m < ra.log.records.size(); ++m)
        CHECK(ra.log.records[m].same_values(rb.log.records[m]));
    CHECK(ra.f.values() == rb.f.values());
}

TEST_CASE("params: validation")
{
    const GridSpec g = build_grid(1, 11, 0.1, 1.0);
    ReconstructionParams p;
    p.K = 1;
    p.alpha = 1;
    p.epsilon = 1;
    p.f0 = ScalarField(g);
    CHECK_NOTHROW(p.validate(g));
    p.alpha = 0;
    CHECK_THROWS_AS(p.validate(g), ConfigError);
    p.alpha = 1;
    p.K = -1;
    CHECK_THROWS_AS(p.validate(g), ConfigError);
    p.K = 1;
    p.epsilon = 0;
    CHECK_THROWS_AS(p.validate(g), ConfigError);
    p.epsilon = 1;
    p.max_iterations = 0;
    CHECK_THROWS_AS(p.validate(g), ConfigError);
    p.max_iterations = 5;
    p.f0 = ScalarField(build_grid(1, 21, 0.1, 1.0));
    CHECK_THROWS_AS(p.validate(g), ConfigError);
}

TEST_CASE("relative error: examples")
{
    const GridSpec g = build_grid(1, 101, 0.01, 1.0);
    const ScalarField f = sample(FunctionSpec::parse("cos(pi*x)+1"), g);
    CHECK(relative_error(f, f) == 0.0);
    CHECK(relative_error(ScalarField(g), f) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(relative_error(ScalarField(g, 1.05 * f.values()), f) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK_THROWS_AS(relative_error(f, ScalarField(g)), ConfigError);
}

TEST_CASE("norm estimate: zero R")
{
    const ProblemSetup s = setup_1d(21, 1.0, "0");
    const NormEstimate e = estimate_norm_bound(s, 5);
    CHECK(e.value == 0.0);
}

TEST_CASE("norm estimate: doubling R quadruples the estimate")
{
    const ProblemSetup s1 = setup_1d(21, 1.0, "x+t+1");
    const ProblemSetup s2 = setup_1d(21, 1.0, "2*(x+t+1)");
    const double a = estimate_norm_bound(s1, 20).value;
    const double b = estimate_norm_bound(s2, 20).value;
    CHECK(std::abs(b - 4 * a) <= 1e-6 * 4 * a);
}

TEST_CASE("norm estimate: agrees with the dense-assembly oracle")
{
    const ProblemSetup s = setup_1d(21, 1.0, "x+t+1");
    const double oracle = wisp::testing::dense_norm_squared(s);
    const double est = estimate_norm_bound(s, 50).value;
    CHECK(std::abs(est - oracle) <= 0.01 * oracle);
}

TEST_CASE("norm estimate: Rayleigh quotients are nondecreasing")
{
    const ProblemSetup s = setup_1d(41, 1.0, "x+t+1");
    const NormEstimate e = estimate_norm_bound(s, 25);
    REQUIRE(e.rayleigh.size() == 25);
    for (std::size_t k = 1; k < e.rayleigh.size(); ++k)
        CHECK(e.rayleigh[k] >= e.rayleigh[k - 1] * (1 - 1e-9));
    CHECK_THROWS_AS(estimate_norm_bound(s, 0), ConfigError);
}

}
