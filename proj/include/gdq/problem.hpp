#pragma once

#include <functional>
#include <stdexcept>

#include "gdq/grid.hpp"

namespace gdq {

/// 1D Burgers problem: u_t + u u_x = nu u_xx with Dirichlet data.
struct Problem1D {
    Grid1D grid;
    double nu = 1.0;
    std::function<double(double)> ic;              // x -> u(x, 0)
    std::function<double(double)> bc_left;         // t -> u(lo, t)
    std::function<double(double)> bc_right;        // t -> u(hi, t)
};

/// 2D scalar Burgers problem: u_t + u u_x + u u_y = nu (u_xx + u_yy).
struct Problem2D {
    Grid2D grid;
    double nu = 1.0;
    std::function<double(double, double)> ic;          // (x, y) -> u(x, y, 0)
    std::function<double(double, double, double)> bc;  // (x, y, t) on the boundary
};

/// Coupled 2D Burgers system with diffusion coefficient 1/Re.
struct ProblemCoupled {
    Grid2D grid;
    double reynolds = 1.0;
    std::function<double(double, double)> ic_u, ic_v;
    std::function<double(double, double, double)> bc_u, bc_v;
};

inline void validate(const Problem1D& p) {
    if (!(p.nu > 0.0)) throw std::invalid_argument("problem: nu must be positive");
    if (!p.ic || !p.bc_left || !p.bc_right)
        throw std::invalid_argument("problem: ic/bc functions must be set");
}

inline void validate(const Problem2D& p) {
    if (!(p.nu > 0.0)) throw std::invalid_argument("problem: nu must be positive");
    if (!p.ic || !p.bc) throw std::invalid_argument("problem: ic/bc functions must be set");
}

inline void validate(const ProblemCoupled& p) {
    if (!(p.reynolds > 0.0)) throw std::invalid_argument("problem: reynolds must be positive");
    if (!p.ic_u || !p.ic_v || !p.bc_u || !p.bc_v)
        throw std::invalid_argument("problem: ic/bc functions must be set");
}

} // namespace gdq
