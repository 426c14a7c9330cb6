#pragma once

#include <stdexcept>
#include <string>

namespace gdq {

/// Malformed run configuration (bad model/case combination, missing
/// parameter, dt not dividing t_final, ...). Maps to CLI exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid with coincident nodes, or whose Lagrange node products
/// over/underflow past double range.
struct degenerate_grid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// LU pivot below the singularity threshold, or a solve whose residual
/// violates the accepted-step bound. Maps to CLI exit code 3.
struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Time marching produced a non-finite state.
struct divergence_error : std::runtime_error {
    int step;
    double time;
    int node;
    divergence_error(const std::string& msg, int step_, double time_, int node_)
        : std::runtime_error(msg), step(step_), time(time_), node(node_) {}
};

/// Eigenvalue iteration failed to converge.
struct eigensolver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A closed-form evaluation became ill-defined (vanishing series denominator).
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gdq
