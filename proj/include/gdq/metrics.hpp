#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdq/dqm.hpp"
#include "gdq/stepper.hpp"

namespace gdq {

/// L2 = sqrt(mean of squared differences) over all evaluation nodes.
inline double l2_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& computed) {
    if (exact.size() == 0 || exact.size() != computed.size())
        throw std::invalid_argument("l2_error: vectors must be nonempty and equal length");
    return std::sqrt((exact - computed).squaredNorm() / static_cast<double>(exact.size()));
}

inline double linf_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& computed) {
    if (exact.size() == 0 || exact.size() != computed.size())
        throw std::invalid_argument("linf_error: vectors must be nonempty and equal length");
    return (exact - computed).cwiseAbs().maxCoeff();
}

struct PointValue {
    std::array<double, 2> coords{0.0, 0.0}; // coords[1] unused in 1D
    double computed = 0.0;
    double exact = 0.0;
    double abs_error = 0.0;
};

struct ErrorReport {
    double l2 = 0.0;
    double linf = 0.0;
    int n_points = 0;
    std::vector<PointValue> pointwise;
};

inline ErrorReport error_report(const Eigen::VectorXd& exact, const Eigen::VectorXd& computed) {
    ErrorReport r;
    r.l2 = l2_error(exact, computed);
    r.linf = linf_error(exact, computed);
    r.n_points = static_cast<int>(exact.size());
    return r;
}

// ---------------------------------------------------------------------------
// Barycentric Lagrange interpolation on the collocation grid. Spectral
// interpolation matches the accuracy class of the collocation solution.
// ---------------------------------------------------------------------------

inline std::vector<double> barycentric_weights(const std::vector<double>& nodes) {
    const std::vector<double> q = lagrange_products(nodes);
    std::vector<double> w(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) w[i] = 1.0 / q[i];
    // The formula is homogeneous in the weights; normalize for headroom.
    double wmax = 0.0;
    for (double v : w) wmax = std::max(wmax, std::abs(v));
    for (double& v : w) v /= wmax;
    return w;
}

inline double barycentric_interpolate(const std::vector<double>& nodes,
                                      const std::vector<double>& weights,
                                      const Eigen::VectorXd& values, double x) {
    const int m = static_cast<int>(nodes.size());
    if (values.size() != m || static_cast<int>(weights.size()) != m)
        throw std::invalid_argument("barycentric_interpolate: size mismatch");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        const double dx = x - nodes[i];
        if (dx == 0.0) return values(i);
        const double r = weights[i] / dx;
        num += r * values(i);
        den += r;
    }
    return num / den;
}

inline double interpolate_1d(const Grid1D& grid, const Eigen::VectorXd& values, double x) {
    const double span = grid.interval.hi - grid.interval.lo;
    if (x < grid.interval.lo - 1e-12 * span || x > grid.interval.hi + 1e-12 * span)
        throw std::domain_error("interpolate_1d: point outside domain");
    return barycentric_interpolate(grid.nodes, barycentric_weights(grid.nodes), values, x);
}

/// Tensor interpolation on the x-major flattening: collapse y first, then x.
inline double interpolate_2d(const Grid2D& grid, const Eigen::VectorXd& flat, double x, double y) {
    if (flat.size() != grid.count())
        throw std::invalid_argument("interpolate_2d: value vector does not match grid");
    const auto& xs = grid.gx.nodes;
    const auto& ys = grid.gy.nodes;
    if (x < grid.gx.interval.lo - 1e-12 || x > grid.gx.interval.hi + 1e-12 ||
        y < grid.gy.interval.lo - 1e-12 || y > grid.gy.interval.hi + 1e-12)
        throw std::domain_error("interpolate_2d: point outside domain");

    const std::vector<double> wx = barycentric_weights(xs);
    const std::vector<double> wy = barycentric_weights(ys);
    Eigen::VectorXd along_x(grid.count_x());
    for (int i = 0; i < grid.count_x(); ++i) {
        const Eigen::VectorXd row = flat.segment(i * grid.count_y(), grid.count_y());
        along_x(i) = barycentric_interpolate(ys, wy, row, y);
    }
    return barycentric_interpolate(xs, wx, along_x, x);
}

namespace detail {

inline int snapshot_index(const Solution& sol, double time) {
    for (int i = 0; i < sol.snapshot_count(); ++i)
        if (std::abs(sol.times[i] - time) <= 1e-9 * std::max(1.0, std::abs(time))) return i;
    throw std::invalid_argument("point_table: time " + std::to_string(time) +
                                " was not recorded as a snapshot");
}

} // namespace detail

/// Field selector for coupled solutions.
enum class Field { U, V };

/// Tabulate computed/exact/|error| at the given abscissae of a recorded time.
inline std::vector<PointValue> point_table(const Solution& sol,
                                           const std::function<double(double, double)>& exact,
                                           const std::vector<double>& xs, double time) {
    if (sol.is_2d()) throw std::invalid_argument("point_table: 1D overload on a 2D solution");
    const int idx = detail::snapshot_index(sol, time);
    Grid1D grid;
    grid.interval = {sol.x_nodes.front(), sol.x_nodes.back()};
    grid.nodes = sol.x_nodes;
    const std::vector<double> w = barycentric_weights(grid.nodes);

    std::vector<PointValue> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        const double span = grid.interval.hi - grid.interval.lo;
        if (x < grid.interval.lo - 1e-12 * span || x > grid.interval.hi + 1e-12 * span)
            throw std::domain_error("point_table: point outside domain");
        PointValue pv;
        pv.coords = {x, 0.0};
        pv.computed = barycentric_interpolate(grid.nodes, w, sol.u[idx], x);
        pv.exact = exact(x, time);
        pv.abs_error = std::abs(pv.computed - pv.exact);
        rows.push_back(pv);
    }
    return rows;
}

inline std::vector<PointValue> point_table_2d(
    const Solution& sol, const std::function<double(double, double, double)>& exact,
    const std::vector<std::array<double, 2>>& points, double time, Field field = Field::U) {
    if (!sol.is_2d()) throw std::invalid_argument("point_table_2d: 2D overload on a 1D solution");
    if (field == Field::V && !sol.is_coupled())
        throw std::invalid_argument("point_table_2d: no v component in this solution");
    const int idx = detail::snapshot_index(sol, time);

    Grid2D grid;
    grid.gx.interval = {sol.x_nodes.front(), sol.x_nodes.back()};
    grid.gx.nodes = sol.x_nodes;
    grid.gy.interval = {sol.y_nodes.front(), sol.y_nodes.back()};
    grid.gy.nodes = sol.y_nodes;
    const Eigen::VectorXd& values = field == Field::U ? sol.u[idx] : sol.v[idx];

    std::vector<PointValue> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        PointValue pv;
        pv.coords = p;
        pv.computed = interpolate_2d(grid, values, p[0], p[1]);
        pv.exact = exact(p[0], p[1], time);
        pv.abs_error = std::abs(pv.computed - pv.exact);
        rows.push_back(pv);
    }
    return rows;
}

} // namespace gdq
