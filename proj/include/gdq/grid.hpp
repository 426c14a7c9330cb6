#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdq {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

inline void validate(const Interval& iv) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi))
        throw std::invalid_argument("interval must satisfy lo < hi with finite bounds");
}

/// Collocation abscissae on [interval.lo, interval.hi], strictly increasing,
/// with nodes.front()/back() bit-exactly equal to the interval bounds.
struct Grid1D {
    Interval interval;
    std::vector<double> nodes;

    int count() const { return static_cast<int>(nodes.size()); }
};

/// Chebyshev-Gauss-Lobatto nodes
///   x_i = lo + (hi-lo)/2 * (1 - cos(i*pi/(M-1))),  i = 0..M-1,
/// evaluated in the half-angle form (hi-lo)*sin^2(i*pi/(2(M-1))), which keeps
/// the node set symmetric about the midpoint to roundoff. Endpoints are
/// clamped to the exact bounds so Dirichlet rows address exact coordinates.
inline Grid1D chebyshev_gauss_lobatto(Interval iv, int m_count) {
    validate(iv);
    if (m_count < 2)
        throw std::invalid_argument("chebyshev_gauss_lobatto: need at least 2 nodes, got " +
                                    std::to_string(m_count));

    const double pi = std::acos(-1.0);
    const double span = iv.hi - iv.lo;
    Grid1D g;
    g.interval = iv;
    g.nodes.resize(m_count);
    for (int i = 0; i < m_count; ++i) {
        const double s = std::sin(0.5 * pi * i / (m_count - 1));
        g.nodes[i] = iv.lo + span * s * s;
    }
    g.nodes.front() = iv.lo;
    g.nodes.back() = iv.hi;
    return g;
}

enum class Ordering { XMajor }; // flattened index k = i*My + j

/// Tensor product of two 1D grids with a fixed x-major flattening.
struct Grid2D {
    Grid1D gx;
    Grid1D gy;
    Ordering ordering = Ordering::XMajor;

    int count_x() const { return gx.count(); }
    int count_y() const { return gy.count(); }
    int count() const { return count_x() * count_y(); }

    int flatten(int i, int j) const { return i * count_y() + j; }
    std::pair<int, int> unflatten(int k) const { return {k / count_y(), k % count_y()}; }

    bool on_boundary(int i, int j) const {
        return i == 0 || i == count_x() - 1 || j == 0 || j == count_y() - 1;
    }
};

inline Grid2D tensor_grid(Grid1D gx, Grid1D gy) {
    return Grid2D{std::move(gx), std::move(gy), Ordering::XMajor};
}

} // namespace gdq
