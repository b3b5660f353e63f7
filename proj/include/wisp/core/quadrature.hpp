#pragma once

#include "wisp/core/field.hpp"
#include "wisp/core/region.hpp"

#include <Eigen/Dense>

namespace wisp {

/// Composite trapezoidal weights for `nodes` equispaced points.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> trapezoid_weights(Eigen::Index nodes, Scalar step)
{
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(nodes, step);
    w[0] *= Scalar(0.5);
    w[nodes - 1] *= Scalar(0.5);
    return w;
}

/// Tensor-product trapezoidal weights on the spatial grid.
Eigen::VectorXd spatial_weights(const GridSpec& grid);

/// Trapezoidal weights over the time levels 0..J.
Eigen::VectorXd time_weights(const GridSpec& grid);

template <typename DerivedA, typename DerivedB, typename DerivedW>
typename DerivedA::Scalar weighted_dot(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b,
                                       const Eigen::MatrixBase<DerivedW>& w)
{
    return (a.array() * b.array() * w.array()).sum();
}

/// Trapezoidal L2(Omega) inner product.
double inner_product(const ScalarField& a, const ScalarField& b);

/// Trapezoidal L2 norm over Omega.
double l2_norm(const ScalarField& field);

/// Trapezoidal L2 norm over the observed nodes of `region`.
double l2_norm(const ScalarField& field, const ObservationRegion& region);

/// Trapezoidal L2(omega x (0,T)) inner product (space and time).
double space_time_inner(const SpaceTimeField& a, const SpaceTimeField& b, const ObservationRegion& region);

/// Squared L2(omega x (0,T)) norm.
double space_time_norm_sq(const SpaceTimeField& a, const ObservationRegion& region);

/// Trapezoidal time integral of the pointwise product a(x,t) b(x,t): a field in x.
ScalarField time_integral_of_product(const SpaceTimeField& a, const SpaceTimeField& b);

} // namespace wisp
