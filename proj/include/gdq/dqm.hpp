#pragma once

#include <Eigen/Dense>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdq/errors.hpp"
#include "gdq/grid.hpp"

namespace gdq {

/// Dense differential-quadrature weighting matrix: row i holds the weights
/// that map nodal values to the order-th derivative at node i.
struct DqMatrix {
    Eigen::MatrixXd entries;
    int order = 1;

    int count() const { return static_cast<int>(entries.rows()); }
};

/// Lagrange node products Q_i = prod_{j != i} (x_i - x_j).
/// Accumulated directly in double; a zero, non-finite, or subnormal product
/// means the grid is unusable for quadrature weights.
inline std::vector<double> lagrange_products(const std::vector<double>& nodes) {
    const int m = static_cast<int>(nodes.size());
    std::vector<double> q(m);
    for (int i = 0; i < m; ++i) {
        double prod = 1.0;
        for (int j = 0; j < m; ++j) {
            if (j != i) prod *= nodes[i] - nodes[j];
        }
        if (!std::isfinite(prod) || std::abs(prod) < DBL_MIN)
            throw degenerate_grid_error(
                "lagrange_products: node product degenerate at index " + std::to_string(i));
        q[i] = prod;
    }
    return q;
}

/// First-derivative weighting matrix:
///   a_ij = Q_i / ((x_i - x_j) Q_j)   for i != j,
///   a_ii = -sum_{j != i} a_ij.
inline DqMatrix first_derivative_matrix(const Grid1D& grid) {
    const int m = grid.count();
    if (m < 2) throw std::invalid_argument("first_derivative_matrix: need at least 2 nodes");
    const auto& x = grid.nodes;
    const std::vector<double> q = lagrange_products(x);

    DqMatrix d;
    d.order = 1;
    d.entries.resize(m, m);
    for (int i = 0; i < m; ++i) {
        double diag = 0.0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const double a = q[i] / ((x[i] - x[j]) * q[j]);
            d.entries(i, j) = a;
            diag -= a;
        }
        d.entries(i, i) = diag;
    }
    return d;
}

/// Order-m weighting matrix as the m-th dense power of the first-derivative
/// matrix.
inline DqMatrix higher_derivative_matrix(const DqMatrix& a1, int order) {
    if (order < 1) throw std::invalid_argument("higher_derivative_matrix: order must be >= 1");
    if (a1.order != 1)
        throw std::invalid_argument("higher_derivative_matrix: base matrix must have order 1");

    DqMatrix d;
    d.order = order;
    d.entries = a1.entries;
    for (int k = 1; k < order; ++k) d.entries = (d.entries * a1.entries).eval();
    return d;
}

inline Eigen::VectorXd apply_derivative(const DqMatrix& d, const Eigen::VectorXd& u) {
    if (u.size() != d.entries.cols())
        throw std::invalid_argument("apply_derivative: vector length " +
                                    std::to_string(u.size()) + " does not match matrix size " +
                                    std::to_string(d.entries.cols()));
    return d.entries * u;
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Full-grid 2D derivative operators on the x-major flattening:
///   Dx^(m) = A^(m) ⊗ I_My,   Dy^(m) = I_Mx ⊗ B^(m).
struct Operator2D {
    Grid2D grid;
    Eigen::MatrixXd dx1, dx2, dy1, dy2;
};

inline Operator2D lift_to_2d(const DqMatrix& ax1, const DqMatrix& ax2, const DqMatrix& by1,
                             const DqMatrix& by2, const Grid2D& grid) {
    const int mx = grid.count_x();
    const int my = grid.count_y();
    if (ax1.count() != mx || ax2.count() != mx || by1.count() != my || by2.count() != my)
        throw std::invalid_argument("lift_to_2d: matrix sizes do not match grid dimensions");
    if (ax1.order != 1 || by1.order != 1 || ax2.order != 2 || by2.order != 2)
        throw std::invalid_argument("lift_to_2d: expected first/second derivative matrices");

    const Eigen::MatrixXd ix = Eigen::MatrixXd::Identity(mx, mx);
    const Eigen::MatrixXd iy = Eigen::MatrixXd::Identity(my, my);
    Operator2D ops;
    ops.grid = grid;
    ops.dx1 = kron(ax1.entries, iy);
    ops.dx2 = kron(ax2.entries, iy);
    ops.dy1 = kron(ix, by1.entries);
    ops.dy2 = kron(ix, by2.entries);
    return ops;
}

/// Convenience builder: derivative matrices for both directions, lifted.
inline Operator2D build_operators_2d(const Grid2D& grid) {
    const DqMatrix ax1 = first_derivative_matrix(grid.gx);
    const DqMatrix ax2 = higher_derivative_matrix(ax1, 2);
    const DqMatrix by1 = first_derivative_matrix(grid.gy);
    const DqMatrix by2 = higher_derivative_matrix(by1, 2);
    return lift_to_2d(ax1, ax2, by1, by2, grid);
}

} // namespace gdq
