#pragma once

#include "wisp/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace wisp {

/// Pre-factored tridiagonal matrix for repeated line solves (Thomas algorithm).
///
/// Row k reads sub[k] x[k-1] + main[k] x[k] + super[k] x[k+1]; sub[0] and
/// super[n-1] are ignored. The main diagonal must be strictly dominant.
template <typename Scalar>
class TridiagonalSystem {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    TridiagonalSystem(Vector sub, Vector main, Vector super)
        : sub_(std::move(sub)), main_(std::move(main)), super_(std::move(super))
    {
        const Eigen::Index n = main_.size();
        if (n < 2 || sub_.size() != n || super_.size() != n)
            throw ConfigError("tridiagonal system: inconsistent diagonal lengths");
        for (Eigen::Index k = 0; k < n; ++k) {
            const Scalar off = (k > 0 ? std::abs(sub_[k]) : Scalar(0)) + (k + 1 < n ? std::abs(super_[k]) : Scalar(0));
            if (!(std::abs(main_[k]) > off))
                throw NumericalError("tridiagonal system: main diagonal is not strictly dominant");
        }

        inv_denom_.resize(n);
        modified_super_.resize(n);
        inv_denom_[0] = Scalar(1) / main_[0];
        modified_super_[0] = super_[0] * inv_denom_[0];
        for (Eigen::Index k = 1; k < n; ++k) {
            inv_denom_[k] = Scalar(1) / (main_[k] - sub_[k] * modified_super_[k - 1]);
            modified_super_[k] = k + 1 < n ? super_[k] * inv_denom_[k] : Scalar(0);
        }
    }

    Eigen::Index size() const noexcept { return main_.size(); }

    const Vector& sub() const noexcept { return sub_; }
    const Vector& main() const noexcept { return main_; }
    const Vector& super() const noexcept { return super_; }

    /// Overwrites `rhs` with the solution.
    template <typename Derived>
    void solve_in_place(Eigen::MatrixBase<Derived>& rhs) const
    {
        const Eigen::Index n = size();
        rhs[0] *= inv_denom_[0];
        for (Eigen::Index k = 1; k < n; ++k)
            rhs[k] = (rhs[k] - sub_[k] * rhs[k - 1]) * inv_denom_[k];
        for (Eigen::Index k = n - 2; k >= 0; --k)
            rhs[k] -= modified_super_[k] * rhs[k + 1];
    }

    /// Solves every line of a row-major block in place. The block holds
    /// `outer` slabs of size() * inner values; line (o, i) is the strided
    /// sequence data[o * size() * inner + k * inner + i], k = 0..size()-1.
    /// Lines sharing a slab are swept together over contiguous rows.
    void solve_lines(Scalar* data, Eigen::Index outer, Eigen::Index inner) const
    {
        using Row = Eigen::Map<Eigen::Array<Scalar, Eigen::Dynamic, 1>>;
        const Eigen::Index n = size();
        for (Eigen::Index o = 0; o < outer; ++o) {
            Scalar* slab = data + o * n * inner;
            Row(slab, inner) *= inv_denom_[0];
            for (Eigen::Index k = 1; k < n; ++k)
                Row(slab + k * inner, inner) =
                    (Row(slab + k * inner, inner) - sub_[k] * Row(slab + (k - 1) * inner, inner)) * inv_denom_[k];
            for (Eigen::Index k = n - 2; k >= 0; --k)
                Row(slab + k * inner, inner) -= modified_super_[k] * Row(slab + (k + 1) * inner, inner);
        }
    }

    /// y = T x, for residual checks.
    template <typename Derived>
    Vector multiply(const Eigen::MatrixBase<Derived>& x) const
    {
        const Eigen::Index n = size();
        Vector y(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            Scalar v = main_[k] * x[k];
            if (k > 0)
                v += sub_[k] * x[k - 1];
            if (k + 1 < n)
                v += super_[k] * x[k + 1];
            y[k] = v;
        }
        return y;
    }

private:
    Vector sub_, main_, super_;
    Vector inv_denom_, modified_super_;
};

/// I - c * D2 on one grid line, where D2 is the unscaled second difference
/// with mirrored ghost nodes (homogeneous Neumann ends).
template <typename Scalar>
TridiagonalSystem<Scalar> neumann_implicit_line(Eigen::Index nodes, Scalar coupling)
{
    using Vector = typename TridiagonalSystem<Scalar>::Vector;
    Vector sub = Vector::Constant(nodes, -coupling);
    Vector main = Vector::Constant(nodes, Scalar(1) + Scalar(2) * coupling);
    Vector super = Vector::Constant(nodes, -coupling);
    super[0] = Scalar(-2) * coupling;
    sub[nodes - 1] = Scalar(-2) * coupling;
    sub[0] = Scalar(0);
    super[nodes - 1] = Scalar(0);
    return TridiagonalSystem<Scalar>(std::move(sub), std::move(main), std::move(super));
}

} // namespace wisp
