/*
Copyright 2026 The trigpde authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef TRIGPDE_BENCH_HPP
#define TRIGPDE_BENCH_HPP

#include <sstream>

#include "trigpde/metrics.hpp"
#include "trigpde/problems.hpp"

namespace trigpde::bench {

inline std::string boundary_string(const Problem& pb) {
    std::string s;
    for (int c = 0; c < pb.components; ++c) {
        const auto& pair = pb.boundary.at(c);
        if (c)
            s += ",";
        s += to_char(pair.kind_a);
        s += to_char(pair.kind_b);
    }
    return s;
}

/// Integrate a problem and compare the observable against the exact solution
/// over every stored time and lattice point.
inline ErrorReport evaluate(const Problem& pb, Method method, int iterations = 4,
                            Trajectory* traj_out = nullptr) {
    MethodConfig cfg;
    cfg.method = method;
    cfg.iterations = iterations;
    Trajectory traj = run(pb, cfg);

    ErrorReport rep;
    rep.problem = pb.id;
    rep.method = to_string(method);
    rep.boundary = boundary_string(pb);
    rep.dt = pb.time.dt();
    rep.dx = pb.grid.dx();
    rep.seconds = traj.wall_seconds;
    if (traj.diverged) {
        rep.diverged = true;
        rep.error = std::numeric_limits<double>::infinity();
        if (traj_out)
            *traj_out = std::move(traj);
        return rep;
    }

    const std::vector<Complex> numeric = observable_series(traj, pb.observable);
    std::vector<Complex> analytic;
    analytic.reserve(numeric.size());
    for (double t : traj.times)
        for (int c = 0; c < pb.components; ++c)
            for (int j = 0; j < pb.grid.n; ++j)
                analytic.push_back(pb.observable(c, pb.exact(c, t, pb.grid.point(j))));

    const double m_norm =
        pb.error_normalization > 0.0 ? pb.error_normalization : max_abs(numeric);
    rep.error = rms_error_uniform(numeric, analytic, m_norm);
    if (traj_out)
        *traj_out = std::move(traj);
    return rep;
}

struct TableRow {
    std::string label;
    std::vector<ErrorReport> cells;
};

struct Table {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
};

struct StochasticResult {
    EnsembleSeries series;            // ensemble J(t)
    std::vector<double> j_full;       // analytic J, full mode sum
    std::vector<double> j_resolved;   // analytic J over the lattice-resolved modes
    std::vector<double> j_discrete;   // expectation of the discretized scheme
    double eps_c = 0.0;               // vs the full series
    int outside_3se = 0;              // times where |mean - j_discrete| > 3 SE
    double seconds = 0.0;
};

/// Ensemble run of the stochastic heat equation; J(t) per trajectory is the
/// trapezoidal integral of |a|^2. The lattice only excites n_transform sine
/// modes, so the mean is compared mode-for-mode against the truncated
/// analytic series; eps_c is also reported against the full series.
inline StochasticResult run_stochastic_heat(int samples, std::uint64_t seed = 42,
                                            int n_points = 101, int n_steps = 1000) {
    Problem pb = problems::stochastic_heat(n_points, n_steps);
    MethodConfig cfg;
    cfg.method = Method::FIP;
    cfg.ensemble_size = samples;
    cfg.seed = seed;

    const double dx = pb.grid.dx();
    auto j_of = [dx, &pb](double, const Field& u) {
        std::vector<double> sq(pb.grid.n);
        auto comp = u.component(0);
        for (int j = 0; j < pb.grid.n; ++j)
            sq[j] = std::norm(comp[j]);
        return trapezoid(sq, dx);
    };

    StochasticResult res;
    res.series = run_ensemble(pb, cfg, j_of);
    res.seconds = res.series.wall_seconds;
    if (res.series.diverged)
        return res;

    const int n_modes = TransformPlan::create(TransformKind::Dst1, pb.grid.n).n_transform;
    const double length = pb.grid.length();
    const double dt = pb.time.dt();
    res.j_full.reserve(res.series.times.size());
    res.j_resolved.reserve(res.series.times.size());
    res.j_discrete.reserve(res.series.times.size());
    for (std::size_t i = 0; i < res.series.times.size(); ++i) {
        const double t = res.series.times[i];
        res.j_full.push_back(problems::stochastic_heat_j(t, length));
        res.j_resolved.push_back(problems::stochastic_heat_j(t, length, n_modes));
        res.j_discrete.push_back(problems::stochastic_heat_j_discrete(
            static_cast<int>(i), dt, length, n_modes));
    }

    double sum = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < res.series.times.size(); ++i) {
        const double d = res.series.mean[i] - res.j_full[i];
        sum += d * d;
        peak = std::max(peak, std::abs(res.series.mean[i]));
        const double gap = std::abs(res.series.mean[i] - res.j_discrete[i]);
        if (i > 0 && gap > 3.0 * res.series.std_error[i])
            ++res.outside_3se;
    }
    res.eps_c = std::sqrt(sum / (static_cast<double>(res.series.times.size()) * peak));
    return res;
}

/// Reproduce one benchmark table. Tables 1-2 vary the time step per row;
/// Tables 3-9 vary the boundary conditions; Table 10 is the ensemble run and
/// is exposed through run_stochastic_heat instead.
inline Table run_table(int id, int iterations = 4) {
    Table tbl;
    tbl.id = id;
    switch (id) {
        case 1:
        case 2: {
            const std::string bc = id == 1 ? "DD" : "NN";
            tbl.title = "heat equation, zero " + bc + " boundaries";
            tbl.columns = {"FD", "FSD", "FIP"};
            for (int steps : {2000, 1000, 500, 10}) {
                Problem pb = problems::heat_zero_boundary(bc, 21, steps);
                TableRow row;
                std::ostringstream label;
                label << "dt=1/" << steps;
                row.label = label.str();
                for (Method m : {Method::FD, Method::FSD, Method::FIP})
                    row.cells.push_back(evaluate(pb, m, iterations));
                tbl.rows.push_back(std::move(row));
            }
            break;
        }
        case 3: {
            tbl.title = "shifted NLSE soliton";
            tbl.columns = {"FD", "FIP"};
            for (const std::string& bc : {"DD", "DN", "ND"}) {
                Problem pb = problems::nlse_shifted_soliton(bc);
                TableRow row;
                row.label = bc;
                for (Method m : {Method::FD, Method::FIP})
                    row.cells.push_back(evaluate(pb, m, iterations));
                tbl.rows.push_back(std::move(row));
            }
            break;
        }
        case 4: {
            tbl.title = "heat equation, four boundary pairs";
            tbl.columns = {"FIP"};
            for (const std::string& bc : {"DD", "NN", "DN", "ND"}) {
                Problem pb = problems::heat_nonperiodic(bc);
                TableRow row;
                row.label = bc;
                row.cells.push_back(evaluate(pb, Method::FIP, iterations));
                tbl.rows.push_back(std::move(row));
            }
            break;
        }
        case 5:
        case 6:
        case 7: {
            tbl.columns = {"FSD"};
            for (const std::string& bc : {"DD", "NN", "DN", "ND"}) {
                Problem pb = id == 5   ? problems::nlse_soliton_td_boundary(bc)
                             : id == 6 ? problems::peregrine(bc)
                                       : problems::breather(bc);
                tbl.title = id == 5   ? "NLSE soliton, time-dependent boundaries"
                            : id == 6 ? "Peregrine solution"
                                      : "NLSE breather";
                TableRow row;
                row.label = bc;
                row.cells.push_back(evaluate(pb, Method::FSD, iterations));
                tbl.rows.push_back(std::move(row));
            }
            break;
        }
        case 8: {
            tbl.title = "double simulton";
            tbl.columns = {"FSD"};
            const std::pair<std::string, std::string> pairs[] = {
                {"DD", "NN"}, {"NN", "DN"}, {"DN", "ND"}, {"ND", "DD"}};
            for (const auto& [a, b] : pairs) {
                Problem pb = problems::double_simulton(a, b);
                TableRow row;
                row.label = a + ";" + b;
                row.cells.push_back(evaluate(pb, Method::FSD, iterations));
                tbl.rows.push_back(std::move(row));
            }
            break;
        }
        case 9: {
            tbl.title = "triple simulton";
            tbl.columns = {"FSD"};
            Problem pb = problems::triple_simulton();
            TableRow row;
            row.label = "DD;ND;NN";
            row.cells.push_back(evaluate(pb, Method::FSD, iterations));
            tbl.rows.push_back(std::move(row));
            break;
        }
        default:
            throw std::invalid_argument("run_table: table id must be 1..9");
    }
    return tbl;
}

} // namespace trigpde::bench

#endif
