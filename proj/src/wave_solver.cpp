#include "wisp/solvers/wave_solver.hpp"

#include "wisp/core/quadrature.hpp"
#include "wisp/errors.hpp"

namespace wisp {

namespace {

Eigen::Index outer_count(const GridSpec& grid, int axis)
{
    Eigen::Index o = 1;
    for (int a = 0; a < axis; ++a)
        o *= grid.nodes_per_axis();
    return o;
}

void require_finite(const Eigen::MatrixXd& m, const char* what)
{
    if (!m.allFinite())
        throw NumericalError(std::string(what) + ": non-finite input");
}

} // namespace

SolverScheme scheme_for(const GridSpec& grid, double theta)
{
    if (!(theta >= 0.25 && theta <= 0.5))
        throw ConfigError("solver: theta must lie in [1/4, 1/2]");
    SolverScheme s;
    s.variant = grid.dim() == 1 ? SolverScheme::Variant::ImplicitThreeLevel : SolverScheme::Variant::Adi;
    s.theta = theta;
    return s;
}

WaveStepper::WaveStepper(const GridSpec& grid, const SolverScheme& scheme)
    : grid_(grid)
    , scheme_(scheme)
    , line_(neumann_implicit_line<double>(grid.nodes_per_axis(),
                                           scheme.theta * grid.tau() * grid.tau() / (grid.h() * grid.h())))
    , work_(static_cast<Eigen::Index>(grid.node_count()))
{
    if (!(scheme.theta >= 0.25 && scheme.theta <= 0.5))
        throw ConfigError("solver: theta must lie in [1/4, 1/2]");
    if (scheme.variant == SolverScheme::Variant::ImplicitThreeLevel && grid.dim() != 1)
        throw ConfigError("solver: the implicit three-level variant is one-dimensional; use ADI");
}

void WaveStepper::apply_laplacian(const Eigen::VectorXd& u, Eigen::VectorXd& out) const
{
    using Row = Eigen::Map<const Eigen::ArrayXd>;
    using OutRow = Eigen::Map<Eigen::ArrayXd>;
    const Eigen::Index n = grid_.nodes_per_axis();
    const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
    out.setZero(u.size());

    for (int axis = 0; axis < grid_.dim(); ++axis) {
        const auto inner = static_cast<Eigen::Index>(grid_.stride(axis));
        const Eigen::Index outer = outer_count(grid_, axis);
        for (Eigen::Index o = 0; o < outer; ++o) {
            const double* src = u.data() + o * n * inner;
            double* dst = out.data() + o * n * inner;
            auto row = [&](Eigen::Index k) { return Row(src + k * inner, inner); };
            OutRow(dst, inner) += 2.0 * inv_h2 * (row(1) - row(0));
            for (Eigen::Index k = 1; k + 1 < n; ++k)
                OutRow(dst + k * inner, inner) += inv_h2 * (row(k + 1) - 2.0 * row(k) + row(k - 1));
            OutRow(dst + (n - 1) * inner, inner) += 2.0 * inv_h2 * (row(n - 2) - row(n - 1));
        }
    }
}

void WaveStepper::start(const Eigen::VectorXd& source, Eigen::VectorXd& next) const
{
    next = (0.5 * grid_.tau() * grid_.tau()) * source;
}

void WaveStepper::solve_implicit(Eigen::VectorXd& rhs) const
{
    for (int axis = 0; axis < grid_.dim(); ++axis)
        line_.solve_lines(rhs.data(), outer_count(grid_, axis), static_cast<Eigen::Index>(grid_.stride(axis)));
}

Eigen::VectorXd WaveStepper::apply_implicit(const Eigen::VectorXd& x) const
{
    // Each factor I - theta tau^2 D_aa acts along one axis; apply them in turn.
    const double c = scheme_.theta * grid_.tau() * grid_.tau();
    Eigen::VectorXd y = x;
    for (int axis = 0; axis < grid_.dim(); ++axis) {
        Eigen::VectorXd d2 = Eigen::VectorXd::Zero(y.size());
        const Eigen::Index n = grid_.nodes_per_axis();
        const auto inner = static_cast<Eigen::Index>(grid_.stride(axis));
        const Eigen::Index outer = outer_count(grid_, axis);
        const double inv_h2 = 1.0 / (grid_.h() * grid_.h());
        for (Eigen::Index o = 0; o < outer; ++o) {
            for (Eigen::Index i = 0; i < inner; ++i) {
                auto at = [&](Eigen::Index k) { return y[o * n * inner + k * inner + i]; };
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double left = k == 0 ? at(1) : at(k - 1);
                    const double right = k == n - 1 ? at(n - 2) : at(k + 1);
                    d2[o * n * inner + k * inner + i] = inv_h2 * (left - 2.0 * at(k) + right);
                }
            }
        }
        y -= c * d2;
    }
    return y;
}

void WaveStepper::advance(const Eigen::VectorXd& prev, const Eigen::VectorXd& cur, const Eigen::VectorXd& source,
                          Eigen::VectorXd& next) const
{
    apply_laplacian(cur, work_);
    work_ = grid_.tau() * grid_.tau() * (work_ + source);
    solve_implicit(work_);
    next = 2.0 * cur - prev + work_;
}

SpaceTimeField forward_solve(const GridSpec& grid, const ScalarField& f, const SpaceTimeField& R,
                             const SolverScheme& scheme)
{
    require_same_grid(grid, f.grid(), "forward_solve(f)");
    require_same_grid(grid, R.grid(), "forward_solve(R)");
    require_finite(f.values(), "forward_solve(f)");
    require_finite(R.data(), "forward_solve(R)");

    const WaveStepper stepper(grid, scheme);
    const int levels = grid.time_levels();
    SpaceTimeField u(grid);

    Eigen::VectorXd prev = Eigen::VectorXd::Zero(f.size());
    Eigen::VectorXd cur;
    Eigen::VectorXd next;
    Eigen::VectorXd source = f.values().cwiseProduct(R.slice(0));
    stepper.start(source, cur);
    u.slice(1) = cur;
    for (int j = 1; j + 1 < levels; ++j) {
        source = f.values().cwiseProduct(R.slice(j));
        stepper.advance(prev, cur, source, next);
        u.slice(j + 1) = next;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return u;
}

SpaceTimeField adjoint_solve(const GridSpec& grid, const SpaceTimeField& residual, const ObservationRegion& region,
                             const SolverScheme& scheme)
{
    require_same_grid(grid, residual.grid(), "adjoint_solve(residual)");
    require_same_grid(grid, region.grid(), "adjoint_solve(region)");
    require_finite(residual.data(), "adjoint_solve(residual)");

    const WaveStepper stepper(grid, scheme);
    const int last = grid.time_levels() - 1;
    const Eigen::VectorXd& chi = region.indicator();
    SpaceTimeField v(grid);

    Eigen::VectorXd later = Eigen::VectorXd::Zero(chi.size());
    Eigen::VectorXd cur;
    Eigen::VectorXd earlier;
    Eigen::VectorXd source = chi.cwiseProduct(residual.slice(last));
    stepper.start(source, cur);
    v.slice(last - 1) = cur;
    for (int j = last - 1; j >= 1; --j) {
        source = chi.cwiseProduct(residual.slice(j));
        stepper.advance(later, cur, source, earlier);
        v.slice(j - 1) = earlier;
        std::swap(later, cur);
        std::swap(cur, earlier);
    }
    return v;
}

SpaceTimeField restrict_to(const SpaceTimeField& u, const ObservationRegion& region)
{
    require_same_grid(u.grid(), region.grid(), "restrict_to");
    SpaceTimeField out(u.grid(), u.data());
    out.data().array().colwise() *= region.indicator().array();
    return out;
}

SpaceTimeField apply_forward_operator(const ScalarField& f, const SpaceTimeField& R, const ObservationRegion& region,
                                      const GridSpec& grid, const SolverScheme& scheme)
{
    return restrict_to(forward_solve(grid, f, R, scheme), region);
}

ScalarField apply_adjoint_operator(const SpaceTimeField& residual, const SpaceTimeField& R,
                                   const ObservationRegion& region, const GridSpec& grid, const SolverScheme& scheme)
{
    require_same_grid(grid, R.grid(), "apply_adjoint_operator(R)");
    return time_integral_of_product(R, adjoint_solve(grid, residual, region, scheme));
}

} // namespace wisp
