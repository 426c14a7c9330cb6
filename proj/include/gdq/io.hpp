#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdq/metrics.hpp"
#include "gdq/stability.hpp"
#include "gdq/stepper.hpp"

namespace gdq {

/// Full-precision decimal rendering (17 significant digits round-trips a
/// double exactly); CSV bodies stay byte-identical across runs.
inline std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline nlohmann::json to_json(const ErrorReport& r) {
    return nlohmann::json{{"l2", r.l2}, {"linf", r.linf}, {"n_points", r.n_points}};
}

inline void write_pointwise_csv(std::ostream& os, const std::vector<PointValue>& rows,
                                bool two_d) {
    os << (two_d ? "x,y,computed,exact,abs_err\n" : "x,computed,exact,abs_err\n");
    for (const auto& r : rows) {
        os << fmt17(r.coords[0]) << ',';
        if (two_d) os << fmt17(r.coords[1]) << ',';
        os << fmt17(r.computed) << ',' << fmt17(r.exact) << ',' << fmt17(r.abs_error) << '\n';
    }
}

/// Snapshot rows: t,x[,y],u[,v],u_exact[,v_exact],abs_err. For the coupled
/// system abs_err is the worse of the two component errors.
inline void write_snapshots_csv(std::ostream& os, const Solution& sol,
                                const std::function<double(double, double)>& exact_1d,
                                const std::function<double(double, double, double)>& exact_2d,
                                const std::function<std::pair<double, double>(double, double,
                                                                              double)>& exact_cp,
                                bool final_only) {
    if (sol.is_coupled())
        os << "t,x,y,u,v,u_exact,v_exact,abs_err\n";
    else if (sol.is_2d())
        os << "t,x,y,u,u_exact,abs_err\n";
    else
        os << "t,x,u,u_exact,abs_err\n";

    const int first = final_only ? sol.snapshot_count() - 1 : 0;
    for (int s = first; s < sol.snapshot_count(); ++s) {
        const double t = sol.times[s];
        if (!sol.is_2d()) {
            for (std::size_t i = 0; i < sol.x_nodes.size(); ++i) {
                const double x = sol.x_nodes[i];
                const double ue = exact_1d(x, t);
                const double uc = sol.u[s](static_cast<int>(i));
                os << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(uc) << ',' << fmt17(ue) << ','
                   << fmt17(std::abs(uc - ue)) << '\n';
            }
            continue;
        }
        const int my = static_cast<int>(sol.y_nodes.size());
        for (std::size_t i = 0; i < sol.x_nodes.size(); ++i) {
            for (std::size_t j = 0; j < sol.y_nodes.size(); ++j) {
                const double x = sol.x_nodes[i], y = sol.y_nodes[j];
                const int k = static_cast<int>(i) * my + static_cast<int>(j);
                if (sol.is_coupled()) {
                    const auto [ue, ve] = exact_cp(x, y, t);
                    const double uc = sol.u[s](k), vc = sol.v[s](k);
                    const double err = std::max(std::abs(uc - ue), std::abs(vc - ve));
                    os << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(uc)
                       << ',' << fmt17(vc) << ',' << fmt17(ue) << ',' << fmt17(ve) << ','
                       << fmt17(err) << '\n';
                } else {
                    const double ue = exact_2d(x, y, t);
                    const double uc = sol.u[s](k);
                    os << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(uc)
                       << ',' << fmt17(ue) << ',' << fmt17(std::abs(uc - ue)) << '\n';
                }
            }
        }
    }
}

inline void write_spectra_csv(std::ostream& os, const std::vector<StabilityReport>& reports) {
    os << "size,eig_index,re,im,max_real_part,verdict\n";
    for (const auto& rep : reports) {
        for (int i = 0; i < rep.eigenvalues.size(); ++i) {
            os << rep.grid_size << ',' << i << ',' << fmt17(rep.eigenvalues(i).real()) << ','
               << fmt17(rep.eigenvalues(i).imag()) << ',' << fmt17(rep.max_real_part) << ','
               << (rep.verdict ? 1 : 0) << '\n';
        }
    }
}

} // namespace gdq
