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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigpde/bench.hpp"
#include "trigpde/selftest.hpp"

using nlohmann::json;
using namespace trigpde;

namespace {

json report_to_json(const ErrorReport& rep) {
    return json{{"problem", rep.problem}, {"method", rep.method},
                {"boundary", rep.boundary}, {"dt", rep.dt},
                {"dx", rep.dx},
                {"error", rep.diverged ? json("inf") : json(rep.error)},
                {"seconds", rep.seconds}, {"diverged", rep.diverged}};
}

void write_surface_csv(const std::string& path, const Problem& pb,
                       const Trajectory& traj) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << "t,x,component,re,im\n";
    char line[160];
    for (std::size_t i = 0; i < traj.states.size(); ++i)
        for (int c = 0; c < pb.components; ++c) {
            auto comp = traj.states[i].component(c);
            for (int j = 0; j < pb.grid.n; ++j) {
                std::snprintf(line, sizeof line, "%.17g,%.17g,%d,%.17g,%.17g\n",
                              traj.times[i], pb.grid.point(j), c, comp[j].real(),
                              comp[j].imag());
                out << line;
            }
        }
}

std::string error_cell(const ErrorReport& rep) {
    if (rep.diverged)
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", rep.error);
    return buf;
}

int cmd_run(const std::string& problem, const std::string& boundary,
            const std::string& method_name, int points, int steps, int iterations,
            int ensemble, std::uint64_t seed, const std::string& json_path,
            const std::string& csv_path) {
    const std::map<std::string, Method> methods{
        {"FIP", Method::FIP}, {"FSD", Method::FSD}, {"FD", Method::FD}};
    const auto mit = methods.find(method_name);
    if (mit == methods.end()) {
        std::cerr << "unknown method: " << method_name << "\n";
        return 2;
    }

    json out;
    if (problem == "stochastic-heat" && ensemble > 1) {
        auto res = bench::run_stochastic_heat(ensemble, seed,
                                              points > 0 ? points : 101,
                                              steps > 0 ? steps : 1000);
        Problem pb = problems::by_name(problem, boundary, points, steps);
        out = json{{"problem", pb.id},
                   {"method", method_name},
                   {"boundary", bench::boundary_string(pb)},
                   {"dt", pb.time.dt()},
                   {"dx", pb.grid.dx()},
                   {"error", res.eps_c},
                   {"seconds", res.seconds},
                   {"diverged", res.series.diverged},
                   {"samples", ensemble},
                   {"outside_3se", res.outside_3se}};
    } else {
        Problem pb = problems::by_name(problem, boundary, points, steps);
        Trajectory traj;
        ErrorReport rep = bench::evaluate(pb, mit->second, iterations, &traj);
        out = report_to_json(rep);
        if (!csv_path.empty())
            write_surface_csv(csv_path, pb, traj);
    }

    if (json_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot open " << json_path << "\n";
            return 2;
        }
        f << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_bench(int table, int samples, std::uint64_t seed, int iterations, bool csv) {
    if (table == 10) {
        auto res = bench::run_stochastic_heat(samples, seed);
        if (csv) {
            ErrorReport rep;
            rep.problem = "stochastic-heat";
            rep.method = "FIP";
            rep.boundary = "DD";
            rep.dt = 1.0 / 1000;
            rep.dx = 0.05;
            rep.error = res.eps_c;
            rep.seconds = res.seconds;
            rep.diverged = res.series.diverged;
            std::printf("%s\n%s\n", report_csv_header(), to_csv(rep).c_str());
            return res.series.diverged ? 1 : 0;
        }
        std::printf("stochastic heat equation, %d samples\n", samples);
        std::printf("  %-28s %.3e\n", "eps_c vs analytic J(t):", res.eps_c);
        std::printf("  %-28s %d of %zu\n", "times outside 3x std err:",
                    res.outside_3se, res.series.times.size() - 1);
        std::printf("  %-28s %.1f\n", "seconds:", res.seconds);
        return res.series.diverged ? 1 : 0;
    }

    bench::Table tbl = bench::run_table(table, iterations);
    if (csv) {
        std::printf("%s\n", report_csv_header());
        for (const auto& row : tbl.rows)
            for (const ErrorReport& rep : row.cells)
                std::printf("%s\n", to_csv(rep).c_str());
        return 0;
    }
    std::printf("%s\n", tbl.title.c_str());
    std::printf("  %-10s", "");
    for (const auto& col : tbl.columns)
        std::printf(" %-12s %-9s", (col + " error").c_str(), "time(s)");
    std::printf("\n");
    for (const auto& row : tbl.rows) {
        std::printf("  %-10s", row.label.c_str());
        for (const auto& cell : row.cells)
            std::printf(" %-12s %-9.3f", error_cell(cell).c_str(), cell.seconds);
        std::printf("\n");
    }
    return 0;
}

int cmd_selftest(bool inject_fault) {
    auto results = selftest::run_all(inject_fault);
    double total = 0.0;
    for (const auto& r : results) {
        std::printf("%-28s %s  (%.3fs)  %s\n", r.name.c_str(),
                    r.passed ? "pass" : "FAIL", r.seconds, r.detail.c_str());
        total += r.seconds;
    }
    std::printf("total %.3fs\n", total);
    return selftest::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral PDE/SPDE solver benchmark harness"};
    app.require_subcommand(1);

    std::string problem = "heat-zero", boundary, method = "FIP";
    std::string json_path, csv_path;
    int points = 0, steps = 0, iterations = 4, ensemble = 1, table = 1;
    int samples = 2000;
    std::uint64_t seed = 42;
    bool csv_flag = false, inject_fault = false;

    CLI::App* run_cmd = app.add_subcommand("run", "run one problem/method combination");
    run_cmd->set_config("--config");
    run_cmd->add_option("--problem", problem, "problem id");
    run_cmd->add_option("--boundary", boundary, "boundary pair(s), e.g. DD or DD;NN");
    run_cmd->add_option("--method", method, "FIP, FSD or FD");
    run_cmd->add_option("--points", points, "spatial point count (0 = default)");
    run_cmd->add_option("--steps", steps, "time step count (0 = default)");
    run_cmd->add_option("--iterations", iterations, "midpoint iterations");
    run_cmd->add_option("--ensemble", ensemble, "trajectory count");
    run_cmd->add_option("--seed", seed, "RNG seed");
    run_cmd->add_option("--json", json_path, "write the report here (default stdout)");
    run_cmd->add_option("--csv", csv_path, "write the solution surface here");

    CLI::App* bench_cmd = app.add_subcommand("bench", "reproduce a benchmark table");
    bench_cmd->add_option("--table", table, "table id, 1..10")->required();
    bench_cmd->add_option("--samples", samples, "ensemble size for table 10");
    bench_cmd->add_option("--seed", seed, "RNG seed");
    bench_cmd->add_option("--iterations", iterations, "midpoint iterations");
    bench_cmd->add_flag("--csv", csv_flag, "machine-readable output");

    CLI::App* self_cmd = app.add_subcommand("selftest", "run the invariant suites");
    self_cmd->add_flag("--inject-fault", inject_fault,
                       "corrupt one plan to prove the checks bite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(problem, boundary, method, points, steps, iterations,
                           ensemble, seed, json_path, csv_path);
        if (bench_cmd->parsed())
            return cmd_bench(table, samples, seed, iterations, csv_flag);
        return cmd_selftest(inject_fault);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
