#include "support.hpp"

#include "wisp/core/field.hpp"
#include "wisp/core/function_spec.hpp"
#include "wisp/core/grid.hpp"
#include "wisp/core/quadrature.hpp"
#include "wisp/core/region.hpp"
#include "wisp/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace wisp;

TEST_SUITE("core") {

TEST_CASE("grid: reference 1D mesh")
{
    const GridSpec g = build_grid(1, 101, 0.01, 1.0);
    CHECK(g.node_count() == 101);
    CHECK(g.time_levels() == 101);
    CHECK(g.h() == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(g.tau() * (g.time_levels() - 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("grid: reference 3D mesh")
{
    const GridSpec g = build_grid(3, 51, 0.02, 1.7);
    CHECK(g.node_count() == 51u * 51u * 51u);
    CHECK(g.time_levels() == 86);
    CHECK(std::abs(g.tau() * 85 - 1.7) <= 4e-16);
}

TEST_CASE("grid: smallest legal grid")
{
    const GridSpec g = build_grid(1, 3, 0.5, 1.0);
    CHECK(g.node_count() == 3);
    CHECK(g.time_levels() == 3);
    CHECK(g.h() == 0.5);
}

TEST_CASE("grid: rejections")
{
    CHECK_THROWS_AS(build_grid(0, 11, 0.1, 1.0), ConfigError);
    CHECK_THROWS_AS(build_grid(4, 11, 0.1, 1.0), ConfigError);
    CHECK_THROWS_AS(build_grid(1, 2, 0.1, 1.0), ConfigError);
    CHECK_THROWS_AS(build_grid(1, 11, 0.3, 1.0), ConfigError);
    CHECK_THROWS_AS(build_grid(1, 11, -0.1, 1.0), ConfigError);
}

TEST_CASE("grid: row-major layout, last axis fastest")
{
    const GridSpec g = build_grid(3, 5, 0.25, 1.0);
    CHECK(g.stride(2) == 1);
    CHECK(g.stride(1) == 5);
    CHECK(g.stride(0) == 25);
    const auto mi = g.multi_index(1 * 25 + 2 * 5 + 3);
    CHECK(mi == std::array<int, 3>{1, 2, 3});
    const auto x = g.coordinates(1 * 25 + 2 * 5 + 3);
    CHECK(x[0] == doctest::Approx(0.25));
    CHECK(x[1] == doctest::Approx(0.5));
    CHECK(x[2] == doctest::Approx(0.75));
}

TEST_CASE("function spec: sample examples")
{
    const GridSpec g = build_grid(1, 11, 0.1, 1.0);
    const ScalarField f = sample(FunctionSpec::parse("cos(pi*x)+1"), g);
    CHECK(f[0] == 2.0);
    const ScalarField hat = sample(FunctionSpec::parse("1-abs(2*x-1)"), g);
    CHECK(hat[5] == doctest::Approx(1.0).epsilon(1e-15));
    const FunctionSpec R = FunctionSpec::parse("x+t+1");
    CHECK(R({0.5, 0.0, 0.0}, 0.5) == 2.0);
    const SpaceTimeField Rs = sample_space_time(R, g);
    CHECK(Rs.data()(5, 5) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("function spec: vocabulary and precedence")
{
    const std::array<double, 3> p{0.3, 0.7, 0.2};
    CHECK(FunctionSpec::parse("2^3^2")(p, 0) == 512.0);
    CHECK(FunctionSpec::parse("-2^2")(p, 0) == -4.0);
    CHECK(FunctionSpec::parse("1-2-3")(p, 0) == -4.0);
    CHECK(FunctionSpec::parse("8/4/2")(p, 0) == 1.0);
    CHECK(FunctionSpec::parse("x1-x2+3*t+2")(p, 0.5) == doctest::Approx(0.3 - 0.7 + 1.5 + 2));
    CHECK(FunctionSpec::parse("y*z")(p, 0) == doctest::Approx(0.14));
    CHECK(FunctionSpec::parse("exp(log(2))")(p, 0) == doctest::Approx(2.0));
    CHECK(FunctionSpec::parse("sqrt(4)+tan(0)+sin(0)")(p, 0) == 2.0);
    CHECK(FunctionSpec::parse("2.5e-1")(p, 0) == 0.25);
    CHECK(FunctionSpec::parse("e")(p, 0) == doctest::Approx(std::exp(1.0)));
    CHECK(FunctionSpec::parse("3-exp(1-(x1+x2)/2)")(p, 0) == doctest::Approx(3 - std::exp(0.5)));
    CHECK(FunctionSpec::constant(0.1)(p, 0) == 0.1);
}

TEST_CASE("function spec: dependency flags")
{
    CHECK_FALSE(FunctionSpec::parse("3").depends_on_space());
    CHECK(FunctionSpec::parse("2+pi^2*t^2").depends_on_time());
    CHECK(FunctionSpec::parse("x3").max_axis() == 2);
    CHECK(FunctionSpec::parse("x").max_axis() == 0);
}

TEST_CASE("function spec: errors")
{
    CHECK_THROWS_AS(FunctionSpec::parse("foo(x)"), ConfigError);
    CHECK_THROWS_AS(FunctionSpec::parse("x+"), ConfigError);
    CHECK_THROWS_AS(FunctionSpec::parse("(x"), ConfigError);
    CHECK_THROWS_AS(FunctionSpec::parse("w"), ConfigError);
    CHECK_THROWS_AS(FunctionSpec::parse(""), ConfigError);
    const GridSpec g = build_grid(1, 11, 0.1, 1.0);
    CHECK_THROWS_AS(sample(FunctionSpec::parse("x2"), g), ConfigError);
    CHECK_THROWS_AS(sample(FunctionSpec::parse("t"), g), ConfigError);
}

TEST_CASE("l2 norm: examples")
{
    const GridSpec g = build_grid(1, 101, 0.01, 1.0);
    CHECK(l2_norm(ScalarField::constant(g, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l2_norm(ScalarField(g)) == 0.0);
    const double n = l2_norm(sample(FunctionSpec::parse("cos(pi*x)"), g));
    CHECK(std::abs(n - std::sqrt(0.5)) < 1e-4);
}

TEST_CASE("l2 norm: second order in h")
{
    // The trapezoid is exact for cos^2(pi x) on uniform grids; 1 + x^2 has a
    // non-vanishing endpoint slope of f^2 and shows the h^2 term.
    const double exact = std::sqrt(1.0 + 2.0 / 3.0 + 0.2);
    double prev = 0.0;
    for (const int N : {11, 21, 41, 81}) {
        const GridSpec g = build_grid(1, N, 0.5, 1.0);
        const double err = std::abs(l2_norm(sample(FunctionSpec::parse("1+x^2"), g)) - exact);
        if (prev > 0.0) {
            CHECK(prev / err > 3.8);
            CHECK(prev / err < 4.2);
        }
        prev = err;
    }
}

TEST_CASE("l2 norm: mask and weight consistency")
{
    for (const int dim : {1, 2, 3}) {
        const GridSpec g = build_grid(dim, 11, 0.1, 1.0);
        const ObservationRegion r(g, Box{{0.2, 0.1, 0.3}, {0.8, 0.7, 0.9}});
        const ScalarField ind(g, r.indicator());
        CHECK(l2_norm(ind, r) == doctest::Approx(std::sqrt(r.weights().sum())).epsilon(1e-14));
    }
}

TEST_CASE("region: membership strictly outside the closed box")
{
    const GridSpec g = build_grid(1, 11, 0.1, 1.0);
    const ObservationRegion r(g, Box{{0.1, 0, 0}, {0.9, 0, 0}});
    CHECK(r.contains(0));
    CHECK_FALSE(r.contains(1));   // x = 0.1 lies on the box face
    CHECK_FALSE(r.contains(5));
    CHECK_FALSE(r.contains(9));
    CHECK(r.contains(10));
    CHECK(r.observed_count() == 2);
    CHECK(r.weights().sum() == doctest::Approx(0.1));

    const ObservationRegion whole = ObservationRegion::whole(g);
    CHECK(whole.observed_count() == 11);
    CHECK(whole.weights().sum() == doctest::Approx(1.0));
    CHECK_THROWS_AS(ObservationRegion(g, Box{{0.5, 0, 0}, {0.4, 0, 0}}), ConfigError);
    CHECK_THROWS_AS(ObservationRegion(g, Box{{-0.1, 0, 0}, {0.4, 0, 0}}), ConfigError);
}

TEST_CASE("region: observed weight converges to |omega|")
{
    // Off-grid box faces shift the measured area by at most one cell strip.
    for (const int N : {21, 41, 81, 161}) {
        const GridSpec g = build_grid(2, N, 0.5, 1.0);
        const ObservationRegion r(g, Box{{0.13, 0.17, 0}, {0.81, 0.93, 0}});
        CHECK(std::abs(r.weights().sum() - (1.0 - 0.68 * 0.76)) <= 2.0 * (0.68 + 0.76) * g.h());
    }
}

TEST_CASE("sample is deterministic")
{
    const GridSpec g = build_grid(2, 31, 0.1, 1.0);
    const FunctionSpec f = FunctionSpec::parse("cos(pi*x1)*cos(2*pi*x2)/2+1");
    CHECK(sample(f, g).values() == sample(f, build_grid(2, 31, 0.1, 1.0)).values());
}

TEST_CASE("quadrature: trapezoid weights")
{
    const Eigen::VectorXf w = trapezoid_weights<float>(5, 0.25f);
    CHECK(w.sum() == doctest::Approx(1.0));
    CHECK(w[0] == 0.125f);
    const GridSpec g = build_grid(1, 11, 0.1, 1.0);
    CHECK(time_weights(g).sum() == doctest::Approx(1.0));
    SpaceTimeField one(g, Eigen::MatrixXd::Ones(11, 11));
    CHECK(space_time_norm_sq(one, ObservationRegion::whole(g)) == doctest::Approx(1.0));
    const ScalarField I = time_integral_of_product(one, one);
    CHECK(I[3] == doctest::Approx(1.0));
}

TEST_CASE("grid mismatch is rejected")
{
    const GridSpec a = build_grid(1, 11, 0.1, 1.0);
    const GridSpec b = build_grid(1, 21, 0.1, 1.0);
    CHECK_THROWS_AS(inner_product(ScalarField(a), ScalarField(b)), ConfigError);
    CHECK_THROWS_AS(l2_norm(ScalarField(a), ObservationRegion::whole(b)), ConfigError);
}

}
