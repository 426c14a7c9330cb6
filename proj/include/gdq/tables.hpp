#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdq/exact.hpp"
#include "gdq/metrics.hpp"
#include "gdq/stepper.hpp"

// Published benchmark values, embedded as versioned reference data. Each
// block is tagged with the table it came from; the numbers are regression
// targets with documented tolerances, never assertions of exactness.

namespace gdq::tables {

inline std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

enum class CellKind {
    MatchValue, // |computed - target| <= tolerance
    ErrorBound  // computed <= tolerance
};

struct TableCell {
    std::string row;
    std::string col;
    CellKind kind = CellKind::ErrorBound;
    double published = 0.0; // value printed in the source table (for display)
    double target = 0.0;    // reference value for MatchValue cells
    double tolerance = 0.0;
    double computed = 0.0;
    bool pass = false;
};

struct TableResult {
    int table_id = 0;
    std::string caption;
    std::vector<TableCell> cells;
    bool all_pass = false;
};

inline void finish(TableResult& r) {
    r.all_pass = true;
    for (auto& c : r.cells) {
        c.pass = c.kind == CellKind::MatchValue ? std::abs(c.computed - c.target) <= c.tolerance
                                                : c.computed <= c.tolerance;
        r.all_pass = r.all_pass && c.pass;
    }
}

namespace detail {

struct Norms {
    double l2 = 0.0;
    double linf = 0.0;
};

inline Norms norms_1d(const Solution& sol, const std::function<double(double, double)>& exact,
                      double t) {
    int idx = -1;
    for (int i = 0; i < sol.snapshot_count(); ++i)
        if (std::abs(sol.times[i] - t) <= 1e-9 * std::max(1.0, std::abs(t))) idx = i;
    if (idx < 0) throw std::logic_error("norms_1d: time not sampled");
    Eigen::VectorXd ue(sol.u[idx].size());
    for (int i = 0; i < ue.size(); ++i) ue(i) = exact(sol.x_nodes[i], t);
    return {l2_error(ue, sol.u[idx]), linf_error(ue, sol.u[idx])};
}

inline Norms norms_2d(const Solution& sol,
                      const std::function<double(double, double, double)>& exact, double t,
                      Field field = Field::U) {
    int idx = -1;
    for (int i = 0; i < sol.snapshot_count(); ++i)
        if (std::abs(sol.times[i] - t) <= 1e-9 * std::max(1.0, std::abs(t))) idx = i;
    if (idx < 0) throw std::logic_error("norms_2d: time not sampled");
    const int my = static_cast<int>(sol.y_nodes.size());
    const Eigen::VectorXd& uc = field == Field::U ? sol.u[idx] : sol.v[idx];
    Eigen::VectorXd ue(uc.size());
    for (std::size_t i = 0; i < sol.x_nodes.size(); ++i)
        for (std::size_t j = 0; j < sol.y_nodes.size(); ++j)
            ue(static_cast<int>(i) * my + static_cast<int>(j)) =
                exact(sol.x_nodes[i], sol.y_nodes[j], t);
    return {l2_error(ue, uc), linf_error(ue, uc)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Table 1: pointwise solution, sigma=2, M=40, dt=1e-4, T=1e-3, Re in {1,10}.
// Point cells compare against the printed exact column; norm cells bound the
// node-wise errors against the closed form.
// ---------------------------------------------------------------------------
inline TableResult run_table_1(const ProgressFn& progress = {}) {
    // Table 1 reference data: x, exact(Re=1), exact(Re=10); proposed-scheme
    // norms below.
    static const struct {
        double x, exact_re1, exact_re10;
    } kRows[] = {
        {0.1, 0.653545, 0.065749761}, {0.2, 1.305534, 0.131382943},
        {0.3, 1.949364, 0.196280911}, {0.4, 2.565927, 0.258575995},
        {0.5, 3.110739, 0.313849356}, {0.6, 3.492871, 0.352972351},
        {0.7, 3.549594, 0.359442742}, {0.8, 3.050130, 0.309579963},
        {0.9, 1.816658, 0.184753511},
    };
    static const double kL2[] = {6.66e-6, 7.13e-9};   // proposed scheme, Re=1 / Re=10
    static const double kLinf[] = {1.60e-5, 1.73e-8}; // proposed scheme, Re=1 / Re=10
    const double point_tol[] = {2e-5, 1e-6};
    const double norm_bound[] = {5e-5, 1e-7};

    TableResult result;
    result.table_id = 1;
    result.caption = "pointwise solution, sigma=2, M=40, dt=1e-4, T=1e-3";

    const double re_values[] = {1.0, 10.0};
    for (int k = 0; k < 2; ++k) {
        const double nu = 1.0 / re_values[k];
        const std::string col = "Re=" + std::to_string(static_cast<int>(re_values[k]));
        const Case1D c = make_case_1d("1d-wood", 40, nu, 2.0);
        const Solution sol = march(c.problem, {1e-4, 1e-3}, 10, progress);

        std::vector<double> xs;
        for (const auto& r : kRows) xs.push_back(r.x);
        const auto pts = point_table(sol, c.exact, xs, 1e-3);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            TableCell cell;
            cell.row = "x=" + fmt_short(kRows[i].x);
            cell.col = col;
            cell.kind = CellKind::MatchValue;
            cell.published = k == 0 ? kRows[i].exact_re1 : kRows[i].exact_re10;
            cell.target = cell.published;
            cell.tolerance = point_tol[k];
            cell.computed = pts[i].computed;
            result.cells.push_back(cell);
        }
        const auto n = detail::norms_1d(sol, c.exact, 1e-3);
        result.cells.push_back({"L2", col, CellKind::ErrorBound, kL2[k], 0.0, norm_bound[k], n.l2});
        result.cells.push_back(
            {"Linf", col, CellKind::ErrorBound, kLinf[k], 0.0, norm_bound[k], n.linf});
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 2: error norms, sigma=100, T=1, dt=0.01, Re in {100,200},
// N in {10,20,40,80}. Bound: 10x the published norms.
// ---------------------------------------------------------------------------
inline TableResult run_table_2(const ProgressFn& progress = {}) {
    // Table 2 reference data: N, L2, Linf (proposed scheme).
    static const struct {
        double re;
        int n;
        double l2, linf;
    } kCells[] = {
        {100, 10, 2.3494e-10, 3.9698e-10}, {100, 20, 2.3486e-10, 3.9784e-10},
        {100, 40, 2.3486e-10, 3.9784e-10}, {100, 80, 2.3486e-10, 3.9856e-10},
        {200, 10, 3.161e-11, 5.303e-11},   {200, 20, 3.155e-11, 5.342e-11},
        {200, 40, 3.155e-11, 5.347e-11},   {200, 80, 3.155e-11, 5.355e-11},
    };

    TableResult result;
    result.table_id = 2;
    result.caption = "error norms, sigma=100, T=1, dt=0.01";
    for (const auto& s : kCells) {
        const Case1D c = make_case_1d("1d-wood", s.n, 1.0 / s.re, 100.0);
        const Solution sol = march(c.problem, {0.01, 1.0}, 100, progress);
        const auto n = detail::norms_1d(sol, c.exact, 1.0);
        const std::string row = "N=" + std::to_string(s.n);
        const std::string col = "Re=" + std::to_string(static_cast<int>(s.re));
        result.cells.push_back(
            {row, col + "/L2", CellKind::ErrorBound, s.l2, 0.0, 10.0 * s.l2, n.l2});
        result.cells.push_back(
            {row, col + "/Linf", CellKind::ErrorBound, s.linf, 0.0, 10.0 * s.linf, n.linf});
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 3: error norms, sigma=2, dt=1e-3, T in {0.1,0.5}, Re up to 1e5,
// N in {20,32}. Bound: max(10x published, roundoff floor).
// ---------------------------------------------------------------------------
inline TableResult run_table_3(const ProgressFn& progress = {}) {
    // Table 3 reference data (proposed scheme): T, Re, N, L2, Linf.
    static const struct {
        double t, re;
        int n;
        double l2, linf;
    } kCells[] = {
        {0.1, 10, 20, 3.6018e-7, 8.1267e-7},    {0.1, 10, 32, 3.6020e-7, 8.1808e-7},
        {0.1, 100, 20, 6.6321e-10, 1.5636e-9},  {0.1, 100, 32, 6.6393e-10, 1.5970e-9},
        {0.1, 1e4, 20, 3.5865e-14, 1.4146e-13}, {0.1, 1e4, 32, 7.1838e-16, 1.7435e-15},
        {0.1, 1e5, 20, 4.1011e-16, 1.6284e-15}, {0.1, 1e5, 32, 8.1422e-19, 2.0939e-18},
        {0.5, 10, 20, 6.2788e-8, 1.2138e-7},    {0.5, 10, 32, 6.2787e-8, 1.2158e-7},
        {0.5, 100, 20, 4.9320e-10, 1.1375e-9},  {0.5, 100, 32, 4.9473e-10, 1.1514e-9},
        {0.5, 1e4, 20, 1.0714e-13, 4.0785e-13}, {0.5, 1e4, 32, 7.0998e-16, 1.7148e-15},
        {0.5, 1e5, 20, 1.9304e-15, 7.6459e-15}, {0.5, 1e5, 32, 3.3693e-18, 1.1923e-17},
    };
    constexpr double kFloor = 5e-13; // double-precision floor for the tiny high-Re rows

    TableResult result;
    result.table_id = 3;
    result.caption = "error norms, sigma=2, dt=1e-3, T in {0.1,0.5}";
    for (const double re : {10.0, 100.0, 1e4, 1e5}) {
        for (const int n_nodes : {20, 32}) {
            const Case1D c = make_case_1d("1d-wood", n_nodes, 1.0 / re, 2.0);
            const Solution sol = march(c.problem, {1e-3, 0.5}, 100, progress);
            for (const double t : {0.1, 0.5}) {
                const auto norms = detail::norms_1d(sol, c.exact, t);
                for (const auto& s : kCells) {
                    if (s.t != t || s.re != re || s.n != n_nodes) continue;
                    const std::string row = "T=" + fmt_short(t) + "/Re=" + fmt_short(re);
                    const std::string col = "N=" + std::to_string(n_nodes);
                    result.cells.push_back({row, col + "/L2", CellKind::ErrorBound, s.l2, 0.0,
                                            std::max(10.0 * s.l2, kFloor), norms.l2});
                    result.cells.push_back({row, col + "/Linf", CellKind::ErrorBound, s.linf, 0.0,
                                            std::max(10.0 * s.linf, kFloor), norms.linf});
                }
            }
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 4: pointwise solution of the parabolic-profile case, Re=100
// (nu=0.01), dt=1e-3, N in {40,80}. Cells compare against the series
// solution within 5e-6; printed values shown for reference.
// ---------------------------------------------------------------------------
inline TableResult run_table_4(const ProgressFn& progress = {}) {
    // Table 4 reference data: x, t, exact (printed to 5 decimals).
    static const struct {
        double x, t, exact;
    } kRows[] = {
        {0.25, 0.4, 0.36226}, {0.25, 0.6, 0.28204}, {0.25, 0.8, 0.23045},
        {0.25, 1.0, 0.19469}, {0.25, 3.0, 0.07613}, {0.5, 0.4, 0.68368},
        {0.5, 0.6, 0.54832},  {0.5, 0.8, 0.45371},  {0.5, 1.0, 0.38568},
        {0.5, 3.0, 0.15218},  {0.75, 0.4, 0.92050}, {0.75, 0.6, 0.78299},
        {0.75, 0.8, 0.66272}, {0.75, 1.0, 0.56932}, {0.75, 3.0, 0.22774},
    };

    TableResult result;
    result.table_id = 4;
    result.caption = "pointwise solution, parabolic profile, Re=100, dt=1e-3";
    for (const int n_nodes : {40, 80}) {
        const Case1D c = make_case_1d("1d-fourier", n_nodes, 0.01);
        const Solution sol = march(c.problem, {1e-3, 3.0}, 200, progress);
        for (const auto& s : kRows) {
            const auto pts = point_table(sol, c.exact, {s.x}, s.t);
            TableCell cell;
            cell.row = "x=" + fmt_short(s.x) + "/t=" + fmt_short(s.t);
            cell.col = "N=" + std::to_string(n_nodes);
            cell.kind = CellKind::MatchValue;
            cell.published = s.exact;
            cell.target = pts[0].exact; // series oracle
            cell.tolerance = 5e-6;
            cell.computed = pts[0].computed;
            result.cells.push_back(cell);
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 5: error norms of the parabolic-profile case, dt=1e-3, N=80,
// T in {5,10,15}, nu in {0.005,0.002,1e-4}. The nu=1e-4, T=5 row is
// under-resolved at N=80 by the published numbers themselves (errors of
// order 0.1); the 10x bound simply tracks that magnitude.
// ---------------------------------------------------------------------------
inline TableResult run_table_5(const ProgressFn& progress = {}) {
    // Table 5 reference data (proposed scheme): nu, T, L2, Linf.
    static const struct {
        double nu, t, l2, linf;
    } kCells[] = {
        {0.005, 5, 2.875e-9, 5.419e-9},   {0.005, 10, 5.180e-10, 9.913e-10},
        {0.005, 15, 1.986e-10, 3.762e-10}, {0.002, 5, 1.764e-8, 5.931e-8},
        {0.002, 10, 2.577e-9, 3.938e-9},  {0.002, 15, 1.854e-9, 3.296e-9},
        {1e-4, 5, 0.08022, 0.29237},      {1e-4, 10, 6.029e-7, 1.246e-6},
        {1e-4, 15, 2.386e-7, 5.058e-7},
    };
    constexpr double kFloor = 1e-9;

    TableResult result;
    result.table_id = 5;
    result.caption = "error norms, parabolic profile, dt=1e-3, N=80";
    for (const double nu : {0.005, 0.002, 1e-4}) {
        const Case1D c = make_case_1d("1d-fourier", 80, nu);
        const Solution sol = march(c.problem, {1e-3, 15.0}, 5000, progress);
        for (const double t : {5.0, 10.0, 15.0}) {
            const auto norms = detail::norms_1d(sol, c.exact, t);
            for (const auto& s : kCells) {
                if (s.nu != nu || s.t != t) continue;
                const std::string row = "nu=" + fmt_short(nu);
                const std::string col = "T=" + fmt_short(t);
                result.cells.push_back({row, col + "/L2", CellKind::ErrorBound, s.l2, 0.0,
                                        std::max(10.0 * s.l2, kFloor), norms.l2});
                result.cells.push_back({row, col + "/Linf", CellKind::ErrorBound, s.linf, 0.0,
                                        std::max(10.0 * s.linf, kFloor), norms.linf});
            }
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 6: pointwise absolute errors of the 2D model, Re=20, 16x16, dt=1e-3,
// T in {0.5,0.75,1.0}. Bound: max(10x published, 1e-5); the published
// point-extraction convention is unknown, so the floor absorbs
// interpolation-convention differences.
// ---------------------------------------------------------------------------
inline TableResult run_table_6(const ProgressFn& progress = {}) {
    // Table 6 reference data (proposed scheme): x, y, |err| at T=0.5/0.75/1.0.
    static const struct {
        double x, y, e05, e075, e10;
    } kRows[] = {
        {0.125, 0.125, 4.50e-6, 1.64e-6, 3.37e-7}, {0.125, 0.5, 4.92e-6, 3.40e-6, 8.56e-7},
        {0.125, 0.875, 9.41e-7, 1.45e-6, 3.85e-6}, {0.5, 0.125, 4.92e-6, 3.40e-6, 8.56e-7},
        {0.5, 0.5, 5.60e-7, 2.01e-8, 6.11e-6},     {0.5, 0.875, 4.46e-8, 5.91e-7, 7.69e-7},
        {0.875, 0.125, 9.41e-7, 1.45e-6, 3.85e-6}, {0.875, 0.5, 4.46e-8, 5.91e-7, 7.69e-7},
        {0.875, 0.875, 3.26e-9, 8.71e-9, 3.21e-7},
    };
    constexpr double kFloor = 1e-5;

    TableResult result;
    result.table_id = 6;
    result.caption = "pointwise absolute errors, 2D, Re=20, 16x16, dt=1e-3";
    const Case2D c = make_case_2d("2d", 16, 16, 20.0);
    const Solution sol = march(c.problem, {1e-3, 1.0}, 250, progress);
    const double times[] = {0.5, 0.75, 1.0};
    for (int k = 0; k < 3; ++k) {
        for (const auto& s : kRows) {
            const auto pts = point_table_2d(sol, c.exact, {{s.x, s.y}}, times[k]);
            const double published = k == 0 ? s.e05 : (k == 1 ? s.e075 : s.e10);
            TableCell cell;
            cell.row = "(" + fmt_short(s.x) + "," + fmt_short(s.y) + ")";
            cell.col = "T=" + fmt_short(times[k]);
            cell.kind = CellKind::ErrorBound;
            cell.published = published;
            cell.tolerance = std::max(10.0 * published, kFloor);
            cell.computed = pts[0].abs_error;
            result.cells.push_back(cell);
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 7: error norms of the 2D model at Re=1, T in {0.05,0.25}.
// ---------------------------------------------------------------------------
inline TableResult run_table_7(const ProgressFn& progress = {}) {
    // Table 7 reference data (proposed scheme): grid, dt, L2, Linf per T.
    static const struct {
        int n;
        double dt;
        double t;
        double l2, linf;
    } kCells[] = {
        {5, 0.005, 0.05, 4.375e-7, 5.855e-7},  {10, 0.0005, 0.05, 4.775e-9, 4.492e-9},
        {15, 0.0001, 0.05, 2.407e-10, 1.887e-10}, {5, 0.005, 0.25, 2.909e-7, 4.057e-7},
        {10, 0.0005, 0.25, 2.379e-10, 2.160e-10}, {15, 0.0001, 0.25, 1.207e-11, 8.888e-12},
    };
    constexpr double kFloor = 1e-11;

    TableResult result;
    result.table_id = 7;
    result.caption = "error norms, 2D, Re=1, T in {0.05,0.25}";
    for (const auto grid_case : {std::pair{5, 0.005}, {10, 0.0005}, {15, 0.0001}}) {
        const Case2D c = make_case_2d("2d", grid_case.first, grid_case.first, 1.0);
        const int every = static_cast<int>(std::round(0.05 / grid_case.second));
        const Solution sol = march(c.problem, {grid_case.second, 0.25}, every, progress);
        for (const double t : {0.05, 0.25}) {
            const auto norms = detail::norms_2d(sol, c.exact, t);
            for (const auto& s : kCells) {
                if (s.n != grid_case.first || s.t != t) continue;
                const std::string row = std::to_string(s.n) + "x" + std::to_string(s.n);
                const std::string col = "T=" + fmt_short(t);
                result.cells.push_back({row, col + "/L2", CellKind::ErrorBound, s.l2, 0.0,
                                        std::max(10.0 * s.l2, kFloor), norms.l2});
                result.cells.push_back({row, col + "/Linf", CellKind::ErrorBound, s.linf, 0.0,
                                        std::max(10.0 * s.linf, kFloor), norms.linf});
            }
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 8: error norms of the 2D model, dt=5e-4, 16x16, Re in {10,100,200},
// T in {3,5,10}. Bound: max(30x published, floor) - the 2D lifting
// convention is inferred rather than quoted, hence the wider factor.
// ---------------------------------------------------------------------------
inline TableResult run_table_8(const ProgressFn& progress = {}) {
    // Table 8 reference data (proposed scheme): Re, T, L2, Linf.
    static const struct {
        double re, t, l2, linf;
    } kCells[] = {
        {10, 3, 3.18e-9, 3.52e-9},   {10, 5, 1.29e-13, 1.31e-13}, {10, 10, 3.08e-13, 3.86e-13},
        {100, 3, 3.11e-6, 3.84e-6},  {100, 5, 1.35e-12, 1.26e-12}, {100, 10, 7.59e-13, 8.10e-13},
        {200, 3, 1.56e-4, 2.46e-4},  {200, 5, 1.93e-9, 2.34e-9},  {200, 10, 9.52e-13, 9.54e-13},
    };
    constexpr double kFloor = 1e-10;

    TableResult result;
    result.table_id = 8;
    result.caption = "error norms, 2D, dt=5e-4, 16x16";
    for (const double re : {10.0, 100.0, 200.0}) {
        const Case2D c = make_case_2d("2d", 16, 16, re);
        const Solution sol = march(c.problem, {5e-4, 10.0}, 2000, progress);
        for (const double t : {3.0, 5.0, 10.0}) {
            const auto norms = detail::norms_2d(sol, c.exact, t);
            for (const auto& s : kCells) {
                if (s.re != re || s.t != t) continue;
                const std::string row = "Re=" + fmt_short(re);
                const std::string col = "T=" + fmt_short(t);
                result.cells.push_back({row, col + "/L2", CellKind::ErrorBound, s.l2, 0.0,
                                        std::max(30.0 * s.l2, kFloor), norms.l2});
                result.cells.push_back({row, col + "/Linf", CellKind::ErrorBound, s.linf, 0.0,
                                        std::max(30.0 * s.linf, kFloor), norms.linf});
            }
        }
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Table 9: u-component error norms of the coupled system, Re=100, N=20,
// dt=1e-3, T in {0.5,1,2,4}.
// ---------------------------------------------------------------------------
inline TableResult run_table_9(const ProgressFn& progress = {}) {
    // Table 9 reference data (proposed scheme): T, L2, Linf.
    static const struct {
        double t, l2, linf;
    } kCells[] = {
        {0.5, 1.3078e-5, 1.0721e-5},
        {1.0, 1.0779e-5, 8.3286e-6},
        {2.0, 1.0823e-5, 9.0187e-6},
        {4.0, 7.3885e-8, 8.4375e-8},
    };
    constexpr double kFloor = 1e-9;

    TableResult result;
    result.table_id = 9;
    result.caption = "coupled u-component error norms, Re=100, 20x20, dt=1e-3";
    const CaseCoupled c = make_case_coupled("coupled", 20, 20, 100.0);
    const Solution sol = march(c.problem, {1e-3, 4.0}, 500, progress);
    const auto exact_u = [&](double x, double y, double t) { return c.exact(x, y, t).first; };
    for (const auto& s : kCells) {
        const auto norms = detail::norms_2d(sol, exact_u, s.t, Field::U);
        const std::string row = "T=" + fmt_short(s.t);
        result.cells.push_back({row, "L2", CellKind::ErrorBound, s.l2, 0.0,
                                std::max(30.0 * s.l2, kFloor), norms.l2});
        result.cells.push_back({row, "Linf", CellKind::ErrorBound, s.linf, 0.0,
                                std::max(30.0 * s.linf, kFloor), norms.linf});
    }
    finish(result);
    return result;
}

// ---------------------------------------------------------------------------
// Tables 10/11: pointwise u (rsp. v) of the coupled system at Re=100, 20x20,
// dt=1e-3, T in {0.5,2.0}, compared against the printed exact column within
// 5e-4. The printed v-exact at (0.9,0.9), T=2 disagrees with the closed form
// by 3.4e-4; the tolerance absorbs it.
// ---------------------------------------------------------------------------
inline TableResult run_table_10_11(int table_id, const ProgressFn& progress = {}) {
    // Tables 10-11 reference data: x, y, exact u (T=0.5, T=2.0), exact v
    // (T=0.5, T=2.0).
    static const struct {
        double x, y, u05, u20, v05, v20;
    } kRows[] = {
        {0.1, 0.1, 0.54332, 0.50048, 0.95668, 0.99952},
        {0.5, 0.1, 0.50035, 0.50000, 0.99965, 1.00000},
        {0.9, 0.1, 0.50000, 0.50000, 1.00000, 1.00000},
        {0.3, 0.3, 0.54338, 0.50048, 0.95662, 0.99952},
        {0.7, 0.3, 0.50035, 0.50000, 0.99965, 1.00000},
        {0.1, 0.5, 0.74221, 0.55568, 0.75779, 0.94432},
        {0.5, 0.5, 0.54332, 0.50048, 0.95668, 0.99952},
        {0.9, 0.5, 0.50035, 0.50000, 0.99965, 1.00000},
        {0.3, 0.7, 0.74223, 0.55577, 0.75777, 0.94423},
        {0.7, 0.7, 0.54338, 0.50048, 0.95662, 0.99952},
        {0.1, 0.9, 0.74995, 0.74426, 0.75005, 0.75574},
        {0.5, 0.9, 0.74221, 0.55568, 0.75779, 0.94432},
        {0.9, 0.9, 0.543325, 0.50048, 0.956675, 0.99986},
    };

    TableResult result;
    result.table_id = table_id;
    result.caption = std::string("coupled pointwise ") + (table_id == 10 ? "u" : "v") +
                     ", Re=100, 20x20, dt=1e-3";
    const CaseCoupled c = make_case_coupled("coupled", 20, 20, 100.0);
    const Solution sol = march(c.problem, {1e-3, 2.0}, 500, progress);
    const Field field = table_id == 10 ? Field::U : Field::V;
    const auto exact_component = [&](double x, double y, double t) {
        const auto uv = c.exact(x, y, t);
        return field == Field::U ? uv.first : uv.second;
    };
    for (const double t : {0.5, 2.0}) {
        for (const auto& s : kRows) {
            const auto pts = point_table_2d(sol, exact_component, {{s.x, s.y}}, t, field);
            TableCell cell;
            cell.row = "(" + fmt_short(s.x) + "," + fmt_short(s.y) + ")";
            cell.col = "T=" + fmt_short(t);
            cell.kind = CellKind::MatchValue;
            cell.published = table_id == 10 ? (t == 0.5 ? s.u05 : s.u20)
                                            : (t == 0.5 ? s.v05 : s.v20);
            cell.target = cell.published;
            cell.tolerance = 5e-4;
            cell.computed = pts[0].computed;
            result.cells.push_back(cell);
        }
    }
    finish(result);
    return result;
}

inline TableResult reproduce_table(int table_id, const ProgressFn& progress = {}) {
    switch (table_id) {
        case 1: return run_table_1(progress);
        case 2: return run_table_2(progress);
        case 3: return run_table_3(progress);
        case 4: return run_table_4(progress);
        case 5: return run_table_5(progress);
        case 6: return run_table_6(progress);
        case 7: return run_table_7(progress);
        case 8: return run_table_8(progress);
        case 9: return run_table_9(progress);
        case 10: return run_table_10_11(10, progress);
        case 11: return run_table_10_11(11, progress);
        default: throw config_error("reproduce: table id must be in 1..11");
    }
}

} // namespace gdq::tables
