#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdq/dqm.hpp"
#include "gdq/exact.hpp"
#include "gdq/linalg.hpp"

namespace gdq {

enum class OperatorKind { P1d, RCoupled, ABlock, BBlock };

/// Frozen-coefficient semi-discrete operator restricted to interior nodes.
struct FrozenOperator {
    Eigen::MatrixXd matrix;
    OperatorKind kind = OperatorKind::P1d;
    double nu = 0.0;
    int mx = 0, my = 0; // full node counts per direction (my = 0 for 1D)
    Eigen::VectorXd frozen_u, frozen_v;
};

struct StabilityReport {
    Eigen::VectorXcd eigenvalues;
    double max_real_part = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    int grid_size = 0;
};

/// P = -alpha diag(U) A1 + nu A2 on interior nodes of a 1D grid; A1, A2 are
/// the interior blocks of the full weighting matrices (rows/cols 1..M-2).
inline FrozenOperator assemble_p_1d(const Grid1D& grid, double nu,
                                    const Eigen::VectorXd& frozen_u, double alpha = 1.0) {
    const int m = grid.count();
    if (m < 4) throw std::invalid_argument("assemble_p_1d: grid too small (need M >= 4)");
    if (frozen_u.size() != m)
        throw std::invalid_argument("assemble_p_1d: frozen state must span the full grid");

    const DqMatrix a1 = first_derivative_matrix(grid);
    const DqMatrix a2 = higher_derivative_matrix(a1, 2);
    const int dim = m - 2;
    const Eigen::MatrixXd a1i = a1.entries.block(1, 1, dim, dim);
    const Eigen::MatrixXd a2i = a2.entries.block(1, 1, dim, dim);
    const Eigen::VectorXd ui = frozen_u.segment(1, dim);

    FrozenOperator op;
    op.kind = OperatorKind::P1d;
    op.nu = nu;
    op.mx = m;
    op.frozen_u = frozen_u;
    op.matrix = -alpha * (ui.asDiagonal() * a1i) + nu * a2i;
    return op;
}

namespace detail {

/// Interior restriction of a full-grid state, interior-x-major order.
inline Eigen::VectorXd interior_state(const Grid2D& grid, const Eigen::VectorXd& full) {
    const int mx = grid.count_x(), my = grid.count_y();
    Eigen::VectorXd out((mx - 2) * (my - 2));
    for (int i = 1; i < mx - 1; ++i)
        for (int j = 1; j < my - 1; ++j)
            out((i - 1) * (my - 2) + (j - 1)) = full(grid.flatten(i, j));
    return out;
}

/// A = -diag(U) A1 - diag(V) B1 + nu A2 + nu B2 over interior nodes, with the
/// interior blocks lifted by the same Kronecker construction as the stepper.
inline Eigen::MatrixXd coupled_block(const Grid2D& grid, double nu,
                                     const Eigen::VectorXd& frozen_u,
                                     const Eigen::VectorXd& frozen_v) {
    const int mx = grid.count_x(), my = grid.count_y();
    const DqMatrix ax1 = first_derivative_matrix(grid.gx);
    const DqMatrix ax2 = higher_derivative_matrix(ax1, 2);
    const DqMatrix by1 = first_derivative_matrix(grid.gy);
    const DqMatrix by2 = higher_derivative_matrix(by1, 2);

    const Eigen::MatrixXd ix = Eigen::MatrixXd::Identity(mx - 2, mx - 2);
    const Eigen::MatrixXd iy = Eigen::MatrixXd::Identity(my - 2, my - 2);
    const Eigen::MatrixXd a1 = kron(ax1.entries.block(1, 1, mx - 2, mx - 2), iy);
    const Eigen::MatrixXd a2 = kron(ax2.entries.block(1, 1, mx - 2, mx - 2), iy);
    const Eigen::MatrixXd b1 = kron(ix, by1.entries.block(1, 1, my - 2, my - 2));
    const Eigen::MatrixXd b2 = kron(ix, by2.entries.block(1, 1, my - 2, my - 2));

    const Eigen::VectorXd ui = interior_state(grid, frozen_u);
    const Eigen::VectorXd vi = interior_state(grid, frozen_v);
    return -(ui.asDiagonal() * a1) - (vi.asDiagonal() * b1) + nu * (a2 + b2);
}

} // namespace detail

/// Block-diagonal R = diag(A, B) of the coupled system on interior nodes,
/// with both blocks frozen at the same (U, V) pair and nu = 1/Re.
inline FrozenOperator assemble_r_coupled(const Grid2D& grid, double reynolds,
                                         const Eigen::VectorXd& frozen_u,
                                         const Eigen::VectorXd& frozen_v) {
    const int mx = grid.count_x(), my = grid.count_y();
    if (mx < 4 || my < 4)
        throw std::invalid_argument("assemble_r_coupled: grid too small (need M >= 4)");
    if (frozen_u.size() != grid.count() || frozen_v.size() != grid.count())
        throw std::invalid_argument("assemble_r_coupled: frozen states must span the full grid");
    if (!(reynolds > 0.0)) throw std::invalid_argument("assemble_r_coupled: Re must be positive");

    const double nu = 1.0 / reynolds;
    const Eigen::MatrixXd block = detail::coupled_block(grid, nu, frozen_u, frozen_v);
    const int dim = static_cast<int>(block.rows());

    FrozenOperator op;
    op.kind = OperatorKind::RCoupled;
    op.nu = nu;
    op.mx = mx;
    op.my = my;
    op.frozen_u = frozen_u;
    op.frozen_v = frozen_v;
    op.matrix = Eigen::MatrixXd::Zero(2 * dim, 2 * dim);
    op.matrix.topLeftCorner(dim, dim) = block;
    op.matrix.bottomRightCorner(dim, dim) = block;
    return op;
}

/// Full spectrum with the left-half-plane verdict at tolerance
/// tol_factor * ||matrix||_inf (spectra scale like nu*M^4, so the threshold
/// is kept relative to the operator magnitude).
inline StabilityReport spectrum(const FrozenOperator& op, double tol_factor = 1e-8) {
    StabilityReport rep;
    rep.eigenvalues = dense_eigenvalues(op.matrix);
    rep.max_real_part = rep.eigenvalues.size() ? rep.eigenvalues.real().maxCoeff() : 0.0;
    rep.tolerance = tol_factor * inf_norm(op.matrix);
    rep.verdict = rep.max_real_part <= rep.tolerance;
    rep.grid_size = op.mx;
    return rep;
}

enum class FrozenPolicy {
    Zero,            // diffusion-only operator
    InitialCondition // freeze at the case initial data
};

/// One report per grid size. 1D freezes at zero or at the decaying-sine
/// initial profile (sigma = 2); coupled freezes at zero or at the
/// traveling-front pair, with nu_or_re interpreted as nu (1D) or Re (coupled).
inline std::vector<StabilityReport> stability_sweep(OperatorKind kind,
                                                    const std::vector<int>& grid_sizes,
                                                    double nu_or_re, FrozenPolicy policy) {
    if (kind != OperatorKind::P1d && kind != OperatorKind::RCoupled)
        throw std::invalid_argument("stability_sweep: sweep over P1d or RCoupled operators");
    std::vector<StabilityReport> reports;
    reports.reserve(grid_sizes.size());
    for (int m : grid_sizes) {
        if (m < 4) throw std::invalid_argument("stability_sweep: sizes must be >= 4");
        if (kind == OperatorKind::P1d) {
            const Grid1D grid = chebyshev_gauss_lobatto({0.0, 1.0}, m);
            Eigen::VectorXd frozen = Eigen::VectorXd::Zero(m);
            if (policy == FrozenPolicy::InitialCondition)
                for (int i = 0; i < m; ++i)
                    frozen(i) = wood_exact(grid.nodes[i], 0.0, nu_or_re, 2.0);
            reports.push_back(spectrum(assemble_p_1d(grid, nu_or_re, frozen)));
        } else {
            const Grid2D grid = tensor_grid(chebyshev_gauss_lobatto({0.0, 1.0}, m),
                                            chebyshev_gauss_lobatto({0.0, 1.0}, m));
            Eigen::VectorXd fu = Eigen::VectorXd::Zero(grid.count());
            Eigen::VectorXd fv = Eigen::VectorXd::Zero(grid.count());
            if (policy == FrozenPolicy::InitialCondition)
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        const auto [u, v] =
                            exact_coupled(grid.gx.nodes[i], grid.gy.nodes[j], 0.0, nu_or_re);
                        fu(grid.flatten(i, j)) = u;
                        fv(grid.flatten(i, j)) = v;
                    }
            reports.push_back(spectrum(assemble_r_coupled(grid, nu_or_re, fu, fv)));
        }
        reports.back().grid_size = m;
    }
    return reports;
}

} // namespace gdq
