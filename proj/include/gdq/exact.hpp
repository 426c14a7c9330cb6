#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gdq/errors.hpp"
#include "gdq/problem.hpp"

namespace gdq {

inline constexpr double pi_v = 3.14159265358979323846;

/// 1/(1 + e^s), rewritten for s > 0 so large arguments never overflow.
inline double inv_one_plus_exp(double s) {
    if (s > 0.0) {
        const double e = std::exp(-s);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(s));
}

/// Decaying-sine solution of the 1D problem:
///   u(x,t) = 2 nu pi e^{-nu pi^2 t} sin(pi x) / (sigma + e^{-nu pi^2 t} cos(pi x)).
/// Requires sigma > 1 to keep the denominator away from zero.
inline double wood_exact(double x, double t, double nu, double sigma) {
    if (!(sigma > 1.0))
        throw std::invalid_argument("wood_exact: sigma must exceed 1, got " +
                                    std::to_string(sigma));
    const double decay = std::exp(-nu * pi_v * pi_v * t);
    return 2.0 * nu * pi_v * decay * std::sin(pi_v * x) / (sigma + decay * std::cos(pi_v * x));
}

/// u(x,0) = 4x(1-x), the parabolic initial profile of the second 1D case.
inline double case2_initial(double x) { return 4.0 * x * (1.0 - x); }

struct FourierSeriesParams {
    double nu = 0.01;
    int n_terms = 200;
    int quad_panels = 1 << 16;

    bool operator<(const FourierSeriesParams& o) const {
        return std::tie(nu, n_terms, quad_panels) < std::tie(o.nu, o.n_terms, o.quad_panels);
    }
};

inline void validate(const FourierSeriesParams& p) {
    if (!(p.nu > 0.0)) throw std::invalid_argument("fourier: nu must be positive");
    if (p.n_terms < 1) throw std::invalid_argument("fourier: n_terms must be >= 1");
    if (p.quad_panels < 2 || p.quad_panels % 2 != 0)
        throw std::invalid_argument("fourier: quad_panels must be even and >= 2");
}

/// Composite Simpson rule with an even number of panels.
template <typename F>
double composite_simpson(F&& f, double lo, double hi, int panels) {
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("composite_simpson: panel count must be even and >= 2");
    const double h = (hi - lo) / panels;
    double odds = 0.0, evens = 0.0;
    for (int k = 1; k < panels; ++k) {
        const double v = f(lo + k * h);
        if (k % 2 == 1)
            odds += v;
        else
            evens += v;
    }
    return h / 3.0 * (f(lo) + f(hi) + 4.0 * odds + 2.0 * evens);
}

struct FourierCoefficients {
    double c0 = 0.0;
    std::vector<double> cn;
};

/// Cosine-series coefficients of the heat-kernel weight
///   c_0 = INT_0^1 exp{-(1/3nu) x^2 (3-2x)} dx,
///   c_n = 2 INT_0^1 exp{-(1/3nu) x^2 (3-2x)} cos(n pi x) dx,
/// by composite Simpson. The exponential samples are shared across all n.
inline FourierCoefficients fourier_coefficients(const FourierSeriesParams& params) {
    validate(params);
    const int panels = params.quad_panels;
    const double h = 1.0 / panels;
    const double coeff = 1.0 / (3.0 * params.nu);

    std::vector<double> weight(panels + 1);
    std::vector<double> simpson_w(panels + 1);
    for (int k = 0; k <= panels; ++k) {
        const double x = k * h;
        weight[k] = std::exp(-coeff * x * x * (3.0 - 2.0 * x));
        simpson_w[k] = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    }

    FourierCoefficients c;
    double c0 = 0.0;
    for (int k = 0; k <= panels; ++k) c0 += simpson_w[k] * weight[k];
    c.c0 = c0 * h / 3.0;

    c.cn.resize(params.n_terms);
    for (int n = 1; n <= params.n_terms; ++n) {
        double acc = 0.0;
        for (int k = 0; k <= panels; ++k)
            acc += simpson_w[k] * weight[k] * std::cos(n * pi_v * k * h);
        c.cn[n - 1] = 2.0 * acc * h / 3.0;
    }
    return c;
}

/// Series solution of the 1D case with parabolic initial data, t > 0:
///   u(x,t) = 2 nu pi * sum c_n e^{-n^2 pi^2 nu t} n sin(n pi x)
///            / (c_0 + sum c_n e^{-n^2 pi^2 nu t} cos(n pi x)).
/// Terms are added until their magnitude drops below 1e-15 of the running
/// denominator (the exponential factor makes the tail monotone).
inline double fourier_exact(double x, double t, const FourierCoefficients& c, double nu) {
    if (!(t > 0.0)) throw std::invalid_argument("fourier_exact: defined for t > 0 only");
    double num = 0.0;
    double den = c.c0;
    for (int n = 1; n <= static_cast<int>(c.cn.size()); ++n) {
        const double decay = std::exp(-static_cast<double>(n) * n * pi_v * pi_v * nu * t);
        const double term = c.cn[n - 1] * decay;
        num += term * n * std::sin(n * pi_v * x);
        den += term * std::cos(n * pi_v * x);
        if (std::abs(term) * n < 1e-15 * std::abs(den)) break;
    }
    if (std::abs(den) < 1e-13)
        throw evaluation_error("fourier_exact: series denominator vanished");
    return 2.0 * nu * pi_v * num / den;
}

namespace detail {
/// Coefficients are pure in the params, so cache them per parameter set.
inline const FourierCoefficients& cached_fourier_coefficients(const FourierSeriesParams& p) {
    static std::map<FourierSeriesParams, std::unique_ptr<FourierCoefficients>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, std::make_unique<FourierCoefficients>(fourier_coefficients(p)))
                 .first;
    return *it->second;
}
} // namespace detail

inline double fourier_exact(double x, double t, const FourierSeriesParams& params) {
    validate(params);
    return fourier_exact(x, t, detail::cached_fourier_coefficients(params), params.nu);
}

/// Traveling-front solution of the 2D scalar problem:
///   u(x,y,t) = 1 / (1 + e^{Re (x+y-t)/2}).
inline double exact_2d(double x, double y, double t, double reynolds) {
    return inv_one_plus_exp(reynolds * (x + y - t) / 2.0);
}

/// Traveling-front pair of the coupled system:
///   u = 3/4 - 1/(4(1+e^s)),  v = 3/4 + 1/(4(1+e^s)),  s = Re(4y-4x-t)/32.
inline std::pair<double, double> exact_coupled(double x, double y, double t, double reynolds) {
    const double bracket = 0.25 * inv_one_plus_exp(reynolds * (4.0 * y - 4.0 * x - t) / 32.0);
    return {0.75 - bracket, 0.75 + bracket};
}

// ---------------------------------------------------------------------------
// Problem factories. Each case wires IC/BC to the exact solution at t = 0 and
// on the boundary, and carries the exact evaluator for error reporting.
// ---------------------------------------------------------------------------

struct Case1D {
    Problem1D problem;
    std::function<double(double, double)> exact; // (x, t)
};

struct Case2D {
    Problem2D problem;
    std::function<double(double, double, double)> exact; // (x, y, t)
};

struct CaseCoupled {
    ProblemCoupled problem;
    std::function<std::pair<double, double>(double, double, double)> exact;
};

/// case_id "1d-wood": decaying sine on [0,1], parameters (nu, sigma).
/// case_id "1d-fourier": parabolic initial profile on [0,1], zero BCs.
/// case_id "zero": identically zero data (useful as a fixed point).
inline Case1D make_case_1d(const std::string& case_id, int m_nodes, double nu, double sigma = 2.0,
                           const FourierSeriesParams& series = {}) {
    Grid1D grid = chebyshev_gauss_lobatto({0.0, 1.0}, m_nodes);
    Case1D c;
    c.problem.grid = std::move(grid);
    c.problem.nu = nu;
    if (case_id == "1d-wood") {
        if (!(sigma > 1.0)) throw config_error("case 1d-wood requires sigma > 1");
        c.problem.ic = [nu, sigma](double x) { return wood_exact(x, 0.0, nu, sigma); };
        c.problem.bc_left = [nu, sigma](double t) { return wood_exact(0.0, t, nu, sigma); };
        c.problem.bc_right = [nu, sigma](double t) { return wood_exact(1.0, t, nu, sigma); };
        c.exact = [nu, sigma](double x, double t) { return wood_exact(x, t, nu, sigma); };
    } else if (case_id == "1d-fourier") {
        FourierSeriesParams p = series;
        p.nu = nu;
        c.problem.ic = case2_initial;
        c.problem.bc_left = [](double) { return 0.0; };
        c.problem.bc_right = [](double) { return 0.0; };
        // The series converges only for t > 0; at t = 0 the initial profile
        // itself is the exact value.
        c.exact = [p](double x, double t) {
            return t > 0.0 ? fourier_exact(x, t, p) : case2_initial(x);
        };
    } else if (case_id == "zero") {
        c.problem.ic = [](double) { return 0.0; };
        c.problem.bc_left = [](double) { return 0.0; };
        c.problem.bc_right = [](double) { return 0.0; };
        c.exact = [](double, double) { return 0.0; };
    } else {
        throw config_error("unknown 1d case id: " + case_id);
    }
    return c;
}

/// case_id "2d": logistic front on [0,1]^2 (Re parameter); "zero" as above.
inline Case2D make_case_2d(const std::string& case_id, int mx, int my, double reynolds) {
    Grid2D grid = tensor_grid(chebyshev_gauss_lobatto({0.0, 1.0}, mx),
                              chebyshev_gauss_lobatto({0.0, 1.0}, my));
    Case2D c;
    c.problem.grid = std::move(grid);
    if (case_id == "2d") {
        if (!(reynolds > 0.0)) throw config_error("case 2d requires a positive Reynolds number");
        c.problem.nu = 1.0 / reynolds;
        c.problem.ic = [reynolds](double x, double y) { return exact_2d(x, y, 0.0, reynolds); };
        c.problem.bc = [reynolds](double x, double y, double t) {
            return exact_2d(x, y, t, reynolds);
        };
        c.exact = [reynolds](double x, double y, double t) {
            return exact_2d(x, y, t, reynolds);
        };
    } else if (case_id == "zero") {
        c.problem.nu = reynolds > 0.0 ? 1.0 / reynolds : 1.0;
        c.problem.ic = [](double, double) { return 0.0; };
        c.problem.bc = [](double, double, double) { return 0.0; };
        c.exact = [](double, double, double) { return 0.0; };
    } else {
        throw config_error("unknown 2d case id: " + case_id);
    }
    return c;
}

/// case_id "coupled": the traveling-front pair; "zero" as above.
inline CaseCoupled make_case_coupled(const std::string& case_id, int mx, int my, double reynolds) {
    Grid2D grid = tensor_grid(chebyshev_gauss_lobatto({0.0, 1.0}, mx),
                              chebyshev_gauss_lobatto({0.0, 1.0}, my));
    CaseCoupled c;
    c.problem.grid = std::move(grid);
    c.problem.reynolds = reynolds;
    if (case_id == "coupled") {
        if (!(reynolds > 0.0))
            throw config_error("case coupled requires a positive Reynolds number");
        c.problem.ic_u = [reynolds](double x, double y) {
            return exact_coupled(x, y, 0.0, reynolds).first;
        };
        c.problem.ic_v = [reynolds](double x, double y) {
            return exact_coupled(x, y, 0.0, reynolds).second;
        };
        c.problem.bc_u = [reynolds](double x, double y, double t) {
            return exact_coupled(x, y, t, reynolds).first;
        };
        c.problem.bc_v = [reynolds](double x, double y, double t) {
            return exact_coupled(x, y, t, reynolds).second;
        };
        c.exact = [reynolds](double x, double y, double t) {
            return exact_coupled(x, y, t, reynolds);
        };
    } else if (case_id == "zero") {
        c.problem.reynolds = reynolds > 0.0 ? reynolds : 1.0;
        c.problem.ic_u = [](double, double) { return 0.0; };
        c.problem.ic_v = [](double, double) { return 0.0; };
        c.problem.bc_u = [](double, double, double) { return 0.0; };
        c.problem.bc_v = [](double, double, double) { return 0.0; };
        c.exact = [](double, double, double) { return std::pair<double, double>{0.0, 0.0}; };
    } else {
        throw config_error("unknown coupled case id: " + case_id);
    }
    return c;
}

} // namespace gdq
