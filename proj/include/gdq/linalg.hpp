#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "gdq/errors.hpp"

namespace gdq {

inline double inf_norm(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Dense LU with partial pivoting. Construction factors the matrix and
/// rejects it as singular when the smallest pivot magnitude falls below
/// 1e-13 * ||C||_inf.
class LuSolver {
  public:
    explicit LuSolver(const Eigen::MatrixXd& c) : lu_(c), scale_(inf_norm(c)) {
        const double min_pivot = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
        if (!(scale_ > 0.0) || !(min_pivot >= 1e-13 * scale_))
            throw singular_matrix_error("lu: matrix numerically singular (min pivot " +
                                        std::to_string(min_pivot) + ", scale " +
                                        std::to_string(scale_) + ")");
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return lu_.solve(rhs); }

    double scale() const { return scale_; }

  private:
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double scale_;
};

/// All eigenvalues of a dense real matrix (real Schur iteration).
inline Eigen::VectorXcd dense_eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("dense_eigenvalues: matrix must be square");
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw eigensolver_error("dense_eigenvalues: QR iteration did not converge");
    return es.eigenvalues();
}

} // namespace gdq
