#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdq/dqm.hpp"
#include "gdq/errors.hpp"
#include "gdq/linalg.hpp"
#include "gdq/problem.hpp"

namespace gdq {

enum class StartupScheme {
    ImplicitBdf1, // backward Euler with the advection coefficient frozen at u^0
    ExplicitEuler // forward Euler update, for comparison runs
};

struct TimeConfig {
    double dt = 0.0;
    double t_final = 0.0;
    double step_ratio = 1.0; // K_{n+1}/K_n; the marcher requires 1
    StartupScheme startup = StartupScheme::ImplicitBdf1;

    /// Number of steps N with t_final = N*dt; t_final must be an integer
    /// multiple of dt (no partial final step).
    int step_count() const {
        if (!(dt > 0.0) || !(t_final > 0.0))
            throw config_error("time config: dt and t_final must be positive");
        const double ratio = t_final / dt;
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded))
            throw config_error("time config: t_final must be an integer multiple of dt");
        return static_cast<int>(rounded);
    }
};

/// The two most recent time levels carried between steps.
struct BdfState {
    Eigen::VectorXd u_prev, u_curr;
    Eigen::VectorXd v_prev, v_curr; // populated for the coupled system only
    int step_index = 0;             // n, with u_curr = u^n
    double time = 0.0;              // t_n
};

/// One implicit step: system matrix C, right-hand side F (and G for the
/// coupled system). Boundary rows of C are unit rows.
struct LinearSystem {
    Eigen::MatrixXd c;
    Eigen::VectorXd f;
    Eigen::VectorXd g;
};

/// Time-sampled state history with grid metadata.
struct Solution {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> u;
    std::vector<Eigen::VectorXd> v; // empty unless coupled
    std::vector<double> x_nodes;
    std::vector<double> y_nodes;    // empty for 1D
    TimeConfig config;
    int sample_every = 1;

    bool is_2d() const { return !y_nodes.empty(); }
    bool is_coupled() const { return !v.empty(); }
    int snapshot_count() const { return static_cast<int>(times.size()); }
};

/// Linear predictor w^{n+1} = (1 + r) u^n - r u^{n-1} with r = K_{n+1}/K_n.
inline Eigen::VectorXd extrapolate(const Eigen::VectorXd& u_curr, const Eigen::VectorXd& u_prev,
                                   double ratio) {
    if (u_curr.size() != u_prev.size())
        throw std::invalid_argument("extrapolate: length mismatch");
    return (1.0 + ratio) * u_curr - ratio * u_prev;
}

/// Solve C x = F, enforcing the accepted-step residual bound
/// ||Cx - F||_inf <= 1e-8 (1 + ||F||_inf).
inline Eigen::VectorXd solve_linear(const LinearSystem& sys) {
    if (sys.c.rows() != sys.c.cols() || sys.f.size() != sys.c.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const LuSolver lu(sys.c);
    Eigen::VectorXd x = lu.solve(sys.f);
    const double residual = (sys.c * x - sys.f).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-8 * (1.0 + sys.f.cwiseAbs().maxCoeff())))
        throw singular_matrix_error("solve_linear: residual bound violated (" +
                                    std::to_string(residual) + ")");
    return x;
}

/// Coupled variant: factor C once, back-solve both right-hand sides.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> solve_linear_coupled(const LinearSystem& sys) {
    if (sys.c.rows() != sys.c.cols() || sys.f.size() != sys.c.rows() ||
        sys.g.size() != sys.c.rows())
        throw std::invalid_argument("solve_linear_coupled: dimension mismatch");
    const LuSolver lu(sys.c);
    Eigen::VectorXd x = lu.solve(sys.f);
    Eigen::VectorXd y = lu.solve(sys.g);
    const double rx = (sys.c * x - sys.f).cwiseAbs().maxCoeff();
    const double ry = (sys.c * y - sys.g).cwiseAbs().maxCoeff();
    if (!(rx <= 1e-8 * (1.0 + sys.f.cwiseAbs().maxCoeff())) ||
        !(ry <= 1e-8 * (1.0 + sys.g.cwiseAbs().maxCoeff())))
        throw singular_matrix_error("solve_linear_coupled: residual bound violated");
    return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------------
// System assembly. The nonlinear factor enters as a diagonal scaling of the
// first-derivative rows: row i of D1 is multiplied by the extrapolated field
// value w_i, so C is
//   C = I - (2/3) dt nu D2 + (2/3) dt diag(w) D1,     F = (4/3) u^n - (1/3) u^{n-1},
// with boundary rows replaced by unit rows and F set to the BC at t_{n+1}.
// ---------------------------------------------------------------------------

inline LinearSystem assemble_1d(const Problem1D& problem, const DqMatrix& a1, const DqMatrix& a2,
                                const TimeConfig& cfg, const BdfState& state) {
    const int m = problem.grid.count();
    if (state.u_curr.size() != m || state.u_prev.size() != m)
        throw std::invalid_argument("assemble_1d: state size does not match grid");

    const double k = (2.0 / 3.0) * cfg.dt;
    const Eigen::VectorXd w = extrapolate(state.u_curr, state.u_prev, cfg.step_ratio);

    LinearSystem sys;
    sys.c = -(k * problem.nu) * a2.entries + k * (w.asDiagonal() * a1.entries);
    sys.c.diagonal().array() += 1.0;
    sys.f = (4.0 / 3.0) * state.u_curr - (1.0 / 3.0) * state.u_prev;

    const double t_next = state.time + cfg.dt;
    sys.c.row(0).setZero();
    sys.c(0, 0) = 1.0;
    sys.f(0) = problem.bc_left(t_next);
    sys.c.row(m - 1).setZero();
    sys.c(m - 1, m - 1) = 1.0;
    sys.f(m - 1) = problem.bc_right(t_next);
    return sys;
}

namespace detail {

inline void enforce_dirichlet_2d(const Grid2D& grid,
                                 const std::function<double(double, double)>& value,
                                 Eigen::MatrixXd& c, Eigen::VectorXd& f) {
    const int mx = grid.count_x();
    const int my = grid.count_y();
    for (int i = 0; i < mx; ++i) {
        for (int j = 0; j < my; ++j) {
            if (!grid.on_boundary(i, j)) continue;
            const int k = grid.flatten(i, j);
            c.row(k).setZero();
            c(k, k) = 1.0;
            f(k) = value(grid.gx.nodes[i], grid.gy.nodes[j]);
        }
    }
}

} // namespace detail

inline LinearSystem assemble_2d(const Problem2D& problem, const Operator2D& ops,
                                const TimeConfig& cfg, const BdfState& state) {
    const int n = problem.grid.count();
    if (state.u_curr.size() != n || state.u_prev.size() != n)
        throw std::invalid_argument("assemble_2d: state size does not match grid");

    const double k = (2.0 / 3.0) * cfg.dt;
    const Eigen::VectorXd w = extrapolate(state.u_curr, state.u_prev, cfg.step_ratio);

    LinearSystem sys;
    sys.c = -(k * problem.nu) * (ops.dx2 + ops.dy2) + k * (w.asDiagonal() * (ops.dx1 + ops.dy1));
    sys.c.diagonal().array() += 1.0;
    sys.f = (4.0 / 3.0) * state.u_curr - (1.0 / 3.0) * state.u_prev;

    const double t_next = state.time + cfg.dt;
    detail::enforce_dirichlet_2d(
        problem.grid, [&](double x, double y) { return problem.bc(x, y, t_next); }, sys.c, sys.f);
    return sys;
}

/// Coupled step shares one matrix between both components:
///   C = I - (2/3) dt (1/Re)(Dx2 + Dy2)
///         + (2/3) dt [diag(2u^n - u^{n-1}) Dx1 + diag(2v^n - v^{n-1}) Dy1].
inline LinearSystem assemble_coupled(const ProblemCoupled& problem, const Operator2D& ops,
                                     const TimeConfig& cfg, const BdfState& state) {
    const int n = problem.grid.count();
    if (state.u_curr.size() != n || state.u_prev.size() != n || state.v_curr.size() != n ||
        state.v_prev.size() != n)
        throw std::invalid_argument("assemble_coupled: state size does not match grid");

    const double k = (2.0 / 3.0) * cfg.dt;
    const double nu = 1.0 / problem.reynolds;
    const Eigen::VectorXd w = extrapolate(state.u_curr, state.u_prev, cfg.step_ratio);
    const Eigen::VectorXd eta = extrapolate(state.v_curr, state.v_prev, cfg.step_ratio);

    LinearSystem sys;
    sys.c = -(k * nu) * (ops.dx2 + ops.dy2) + k * (w.asDiagonal() * ops.dx1) +
            k * (eta.asDiagonal() * ops.dy1);
    sys.c.diagonal().array() += 1.0;
    sys.f = (4.0 / 3.0) * state.u_curr - (1.0 / 3.0) * state.u_prev;
    sys.g = (4.0 / 3.0) * state.v_curr - (1.0 / 3.0) * state.v_prev;

    const double t_next = state.time + cfg.dt;
    const Grid2D& grid = problem.grid;
    for (int i = 0; i < grid.count_x(); ++i) {
        for (int j = 0; j < grid.count_y(); ++j) {
            if (!grid.on_boundary(i, j)) continue;
            const int idx = grid.flatten(i, j);
            sys.c.row(idx).setZero();
            sys.c(idx, idx) = 1.0;
            const double x = grid.gx.nodes[i], y = grid.gy.nodes[j];
            sys.f(idx) = problem.bc_u(x, y, t_next);
            sys.g(idx) = problem.bc_v(x, y, t_next);
        }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// Startup step. The default solves the implicit backward-Euler system with
// the advection coefficient frozen at u^0,
//   [I - dt nu D2 + dt diag(u^0) D1] u^1 = u^0,
// with boundary rows enforcing the BC at t_1. The explicit variant applies
// the forward update u^1 = u^0 + dt (nu D2 u^0 - u^0 .* D1 u^0) instead.
// ---------------------------------------------------------------------------

inline Eigen::VectorXd bdf1_startup(const Problem1D& problem, const DqMatrix& a1,
                                    const DqMatrix& a2, const TimeConfig& cfg,
                                    const Eigen::VectorXd& u0) {
    const int m = problem.grid.count();
    if (u0.size() != m) throw std::invalid_argument("bdf1_startup: u0 size mismatch");

    if (cfg.startup == StartupScheme::ExplicitEuler) {
        Eigen::VectorXd u1 = u0 + cfg.dt * (problem.nu * (a2.entries * u0) -
                                            u0.cwiseProduct(a1.entries * u0));
        u1(0) = problem.bc_left(cfg.dt);
        u1(m - 1) = problem.bc_right(cfg.dt);
        return u1;
    }

    LinearSystem sys;
    sys.c = -(cfg.dt * problem.nu) * a2.entries + cfg.dt * (u0.asDiagonal() * a1.entries);
    sys.c.diagonal().array() += 1.0;
    sys.f = u0;
    sys.c.row(0).setZero();
    sys.c(0, 0) = 1.0;
    sys.f(0) = problem.bc_left(cfg.dt);
    sys.c.row(m - 1).setZero();
    sys.c(m - 1, m - 1) = 1.0;
    sys.f(m - 1) = problem.bc_right(cfg.dt);
    return solve_linear(sys);
}

inline Eigen::VectorXd bdf1_startup(const Problem2D& problem, const Operator2D& ops,
                                    const TimeConfig& cfg, const Eigen::VectorXd& u0) {
    const int n = problem.grid.count();
    if (u0.size() != n) throw std::invalid_argument("bdf1_startup: u0 size mismatch");

    if (cfg.startup == StartupScheme::ExplicitEuler) {
        Eigen::VectorXd u1 =
            u0 + cfg.dt * (problem.nu * ((ops.dx2 + ops.dy2) * u0) -
                           u0.cwiseProduct((ops.dx1 + ops.dy1) * u0));
        const Grid2D& grid = problem.grid;
        for (int i = 0; i < grid.count_x(); ++i)
            for (int j = 0; j < grid.count_y(); ++j)
                if (grid.on_boundary(i, j))
                    u1(grid.flatten(i, j)) =
                        problem.bc(grid.gx.nodes[i], grid.gy.nodes[j], cfg.dt);
        return u1;
    }

    LinearSystem sys;
    sys.c = -(cfg.dt * problem.nu) * (ops.dx2 + ops.dy2) +
            cfg.dt * (u0.asDiagonal() * (ops.dx1 + ops.dy1));
    sys.c.diagonal().array() += 1.0;
    sys.f = u0;
    detail::enforce_dirichlet_2d(
        problem.grid, [&](double x, double y) { return problem.bc(x, y, cfg.dt); }, sys.c, sys.f);
    return solve_linear(sys);
}

inline std::pair<Eigen::VectorXd, Eigen::VectorXd> bdf1_startup(const ProblemCoupled& problem,
                                                                const Operator2D& ops,
                                                                const TimeConfig& cfg,
                                                                const Eigen::VectorXd& u0,
                                                                const Eigen::VectorXd& v0) {
    const int n = problem.grid.count();
    if (u0.size() != n || v0.size() != n)
        throw std::invalid_argument("bdf1_startup: state size mismatch");
    const double nu = 1.0 / problem.reynolds;
    const Grid2D& grid = problem.grid;

    if (cfg.startup == StartupScheme::ExplicitEuler) {
        Eigen::VectorXd u1 = u0 + cfg.dt * (nu * ((ops.dx2 + ops.dy2) * u0) -
                                            u0.cwiseProduct(ops.dx1 * u0) -
                                            v0.cwiseProduct(ops.dy1 * u0));
        Eigen::VectorXd v1 = v0 + cfg.dt * (nu * ((ops.dx2 + ops.dy2) * v0) -
                                            u0.cwiseProduct(ops.dx1 * v0) -
                                            v0.cwiseProduct(ops.dy1 * v0));
        for (int i = 0; i < grid.count_x(); ++i)
            for (int j = 0; j < grid.count_y(); ++j)
                if (grid.on_boundary(i, j)) {
                    const int k = grid.flatten(i, j);
                    u1(k) = problem.bc_u(grid.gx.nodes[i], grid.gy.nodes[j], cfg.dt);
                    v1(k) = problem.bc_v(grid.gx.nodes[i], grid.gy.nodes[j], cfg.dt);
                }
        return {std::move(u1), std::move(v1)};
    }

    LinearSystem sys;
    sys.c = -(cfg.dt * nu) * (ops.dx2 + ops.dy2) + cfg.dt * (u0.asDiagonal() * ops.dx1) +
            cfg.dt * (v0.asDiagonal() * ops.dy1);
    sys.c.diagonal().array() += 1.0;
    sys.f = u0;
    sys.g = v0;
    for (int i = 0; i < grid.count_x(); ++i)
        for (int j = 0; j < grid.count_y(); ++j)
            if (grid.on_boundary(i, j)) {
                const int k = grid.flatten(i, j);
                sys.c.row(k).setZero();
                sys.c(k, k) = 1.0;
                sys.f(k) = problem.bc_u(grid.gx.nodes[i], grid.gy.nodes[j], cfg.dt);
                sys.g(k) = problem.bc_v(grid.gx.nodes[i], grid.gy.nodes[j], cfg.dt);
            }
    return solve_linear_coupled(sys);
}

// ---------------------------------------------------------------------------
// Time marching.
// ---------------------------------------------------------------------------

using ProgressFn = std::function<void(int step, int total)>;

namespace detail {

inline void check_finite(const Eigen::VectorXd& u, int step, double time) {
    int worst = 0;
    double worst_mag = -1.0;
    bool bad = false;
    for (int i = 0; i < u.size(); ++i) {
        const double a = std::abs(u(i));
        if (std::isnan(a)) {
            bad = true;
            worst = i;
            break;
        }
        if (a > worst_mag) {
            worst_mag = a;
            worst = i;
        }
        if (std::isinf(a)) bad = true;
    }
    if (bad)
        throw divergence_error("march diverged at step " + std::to_string(step) + " (t = " +
                                   std::to_string(time) + "), worst node " + std::to_string(worst),
                               step, time, worst);
}

inline void validate_march_config(const TimeConfig& cfg, int sample_every) {
    if (cfg.step_ratio != 1.0)
        throw config_error("march: the marcher requires step_ratio == 1");
    if (sample_every < 1) throw config_error("march: sample_every must be >= 1");
}

inline int expected_snapshots(int n_steps, int sample_every) {
    return n_steps / sample_every + 1 + (n_steps % sample_every != 0 ? 1 : 0);
}

} // namespace detail

inline Solution march(const Problem1D& problem, const TimeConfig& cfg, int sample_every,
                      const ProgressFn& progress = {}) {
    validate(problem);
    detail::validate_march_config(cfg, sample_every);
    const int n_steps = cfg.step_count();
    const int m = problem.grid.count();

    const DqMatrix a1 = first_derivative_matrix(problem.grid);
    const DqMatrix a2 = higher_derivative_matrix(a1, 2);

    Solution sol;
    sol.config = cfg;
    sol.sample_every = sample_every;
    sol.x_nodes = problem.grid.nodes;

    Eigen::VectorXd u_prev(m);
    for (int i = 0; i < m; ++i) u_prev(i) = problem.ic(problem.grid.nodes[i]);
    detail::check_finite(u_prev, 0, 0.0);

    const auto record = [&](int step, const Eigen::VectorXd& u) {
        if (step % sample_every == 0 || step == n_steps) {
            sol.times.push_back(step * cfg.dt);
            sol.u.push_back(u);
        }
    };
    record(0, u_prev);

    Eigen::VectorXd u_curr = bdf1_startup(problem, a1, a2, cfg, u_prev);
    detail::check_finite(u_curr, 1, cfg.dt);
    record(1, u_curr);

    for (int n = 1; n < n_steps; ++n) {
        BdfState state{u_prev, u_curr, {}, {}, n, n * cfg.dt};
        const LinearSystem sys = assemble_1d(problem, a1, a2, cfg, state);
        Eigen::VectorXd u_next = solve_linear(sys);
        detail::check_finite(u_next, n + 1, (n + 1) * cfg.dt);
        u_prev = std::move(u_curr);
        u_curr = std::move(u_next);
        record(n + 1, u_curr);
        if (progress) progress(n + 1, n_steps);
    }

    if (sol.snapshot_count() != detail::expected_snapshots(n_steps, sample_every))
        throw std::logic_error("march: snapshot accounting mismatch");
    return sol;
}

inline Solution march(const Problem2D& problem, const TimeConfig& cfg, int sample_every,
                      const ProgressFn& progress = {}) {
    validate(problem);
    detail::validate_march_config(cfg, sample_every);
    const int n_steps = cfg.step_count();
    const Grid2D& grid = problem.grid;
    const Operator2D ops = build_operators_2d(grid);

    Solution sol;
    sol.config = cfg;
    sol.sample_every = sample_every;
    sol.x_nodes = grid.gx.nodes;
    sol.y_nodes = grid.gy.nodes;

    Eigen::VectorXd u_prev(grid.count());
    for (int i = 0; i < grid.count_x(); ++i)
        for (int j = 0; j < grid.count_y(); ++j)
            u_prev(grid.flatten(i, j)) = problem.ic(grid.gx.nodes[i], grid.gy.nodes[j]);
    detail::check_finite(u_prev, 0, 0.0);

    const auto record = [&](int step, const Eigen::VectorXd& u) {
        if (step % sample_every == 0 || step == n_steps) {
            sol.times.push_back(step * cfg.dt);
            sol.u.push_back(u);
        }
    };
    record(0, u_prev);

    Eigen::VectorXd u_curr = bdf1_startup(problem, ops, cfg, u_prev);
    detail::check_finite(u_curr, 1, cfg.dt);
    record(1, u_curr);

    for (int n = 1; n < n_steps; ++n) {
        BdfState state{u_prev, u_curr, {}, {}, n, n * cfg.dt};
        const LinearSystem sys = assemble_2d(problem, ops, cfg, state);
        Eigen::VectorXd u_next = solve_linear(sys);
        detail::check_finite(u_next, n + 1, (n + 1) * cfg.dt);
        u_prev = std::move(u_curr);
        u_curr = std::move(u_next);
        record(n + 1, u_curr);
        if (progress) progress(n + 1, n_steps);
    }

    if (sol.snapshot_count() != detail::expected_snapshots(n_steps, sample_every))
        throw std::logic_error("march: snapshot accounting mismatch");
    return sol;
}

inline Solution march(const ProblemCoupled& problem, const TimeConfig& cfg, int sample_every,
                      const ProgressFn& progress = {}) {
    validate(problem);
    detail::validate_march_config(cfg, sample_every);
    const int n_steps = cfg.step_count();
    const Grid2D& grid = problem.grid;
    const Operator2D ops = build_operators_2d(grid);

    Solution sol;
    sol.config = cfg;
    sol.sample_every = sample_every;
    sol.x_nodes = grid.gx.nodes;
    sol.y_nodes = grid.gy.nodes;

    Eigen::VectorXd u_prev(grid.count()), v_prev(grid.count());
    for (int i = 0; i < grid.count_x(); ++i)
        for (int j = 0; j < grid.count_y(); ++j) {
            const int k = grid.flatten(i, j);
            u_prev(k) = problem.ic_u(grid.gx.nodes[i], grid.gy.nodes[j]);
            v_prev(k) = problem.ic_v(grid.gx.nodes[i], grid.gy.nodes[j]);
        }
    detail::check_finite(u_prev, 0, 0.0);
    detail::check_finite(v_prev, 0, 0.0);

    const auto record = [&](int step, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
        if (step % sample_every == 0 || step == n_steps) {
            sol.times.push_back(step * cfg.dt);
            sol.u.push_back(u);
            sol.v.push_back(v);
        }
    };
    record(0, u_prev, v_prev);

    auto [u_curr, v_curr] = bdf1_startup(problem, ops, cfg, u_prev, v_prev);
    detail::check_finite(u_curr, 1, cfg.dt);
    detail::check_finite(v_curr, 1, cfg.dt);
    record(1, u_curr, v_curr);

    for (int n = 1; n < n_steps; ++n) {
        BdfState state{u_prev, u_curr, v_prev, v_curr, n, n * cfg.dt};
        const LinearSystem sys = assemble_coupled(problem, ops, cfg, state);
        auto [u_next, v_next] = solve_linear_coupled(sys);
        detail::check_finite(u_next, n + 1, (n + 1) * cfg.dt);
        detail::check_finite(v_next, n + 1, (n + 1) * cfg.dt);
        u_prev = std::move(u_curr);
        u_curr = std::move(u_next);
        v_prev = std::move(v_curr);
        v_curr = std::move(v_next);
        record(n + 1, u_curr, v_curr);
        if (progress) progress(n + 1, n_steps);
    }

    if (sol.snapshot_count() != detail::expected_snapshots(n_steps, sample_every))
        throw std::logic_error("march: snapshot accounting mismatch");
    return sol;
}

} // namespace gdq
