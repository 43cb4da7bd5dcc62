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

#ifndef TRIGPDE_METRICS_HPP
#define TRIGPDE_METRICS_HPP

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "trigpde/integrator.hpp"

namespace trigpde {

struct ErrorReport {
    std::string problem;
    std::string method;
    std::string boundary;
    double dt = 0.0;
    double dx = 0.0;
    double error = 0.0;
    double seconds = 0.0;
    bool diverged = false;
};

inline const char* report_csv_header() {
    return "problem,method,boundary,dt,dx,error,seconds,diverged";
}

inline std::string to_csv(const ErrorReport& rep) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%.17g,%.17g,%.17g,%.17g,%d",
                  rep.problem.c_str(), rep.method.c_str(), rep.boundary.c_str(),
                  rep.dt, rep.dx, rep.error, rep.seconds, rep.diverged ? 1 : 0);
    return buf;
}

inline ErrorReport report_from_csv(const std::string& line) {
    std::istringstream in(line);
    ErrorReport rep;
    std::string field;
    auto next = [&]() {
        if (!std::getline(in, field, ','))
            throw std::invalid_argument("report_from_csv: truncated line");
        return field;
    };
    rep.problem = next();
    rep.method = next();
    rep.boundary = next();
    rep.dt = std::stod(next());
    rep.dx = std::stod(next());
    rep.error = std::stod(next());
    rep.seconds = std::stod(next());
    rep.diverged = std::stoi(next()) != 0;
    return rep;
}

/// RMS comparison error over all stored samples, normalized by m_norm:
/// eps_c = sqrt(sum |N - A|^2 / (count * m_norm)).
inline double rms_error_uniform(std::span<const Complex> numeric,
                                std::span<const Complex> analytic, double m_norm) {
    if (numeric.size() != analytic.size())
        throw std::invalid_argument("rms_error_uniform: size mismatch");
    if (!(m_norm > 0.0))
        throw std::invalid_argument("rms_error_uniform: normalization must be > 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = std::abs(numeric[i] - analytic[i]);
        sum += d * d;
    }
    return std::sqrt(sum / (static_cast<double>(numeric.size()) * m_norm));
}

/// Weighted form for non-uniform sample spacings; samples are indexed
/// [i_t * n_x + j_x]. Reduces to the uniform form on uniform grids.
/// Sets *weight_warning when the weights fail to sum to X and T within 1%.
inline double rms_error_weighted(std::span<const Complex> numeric,
                                 std::span<const Complex> analytic,
                                 std::span<const double> dx_weights,
                                 std::span<const double> dt_weights, double x_total,
                                 double t_total, double m_norm,
                                 bool* weight_warning = nullptr) {
    const std::size_t n_t = dt_weights.size();
    const std::size_t n_x = dx_weights.size();
    if (numeric.size() != analytic.size() || numeric.size() != n_t * n_x)
        throw std::invalid_argument("rms_error_weighted: size mismatch");
    if (!(m_norm > 0.0))
        throw std::invalid_argument("rms_error_weighted: normalization must be > 0");
    double sum_dx = 0.0, sum_dt = 0.0;
    for (double w : dx_weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("rms_error_weighted: weights must be > 0");
        sum_dx += w;
    }
    for (double w : dt_weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("rms_error_weighted: weights must be > 0");
        sum_dt += w;
    }
    if (weight_warning)
        *weight_warning = std::abs(sum_dx - x_total) > 0.01 * x_total ||
                          std::abs(sum_dt - t_total) > 0.01 * t_total;
    double sum = 0.0;
    for (std::size_t i = 0; i < n_t; ++i)
        for (std::size_t j = 0; j < n_x; ++j) {
            const double d = std::abs(numeric[i * n_x + j] - analytic[i * n_x + j]);
            sum += d * d * dx_weights[j] * dt_weights[i];
        }
    return std::sqrt(sum / (x_total * t_total * m_norm));
}

/// Trapezoidal integral of uniformly spaced samples.
inline double trapezoid(std::span<const double> f, double dx) {
    if (f.size() < 2)
        return 0.0;
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t j = 1; j + 1 < f.size(); ++j)
        sum += f[j];
    return sum * dx;
}

/// Flattened observable samples o(t_i, x_j, component) of a stored trajectory,
/// indexed [time][component][x].
inline std::vector<Complex> observable_series(const Trajectory& traj,
                                              const ObservableFn& observable) {
    std::vector<Complex> out;
    if (traj.states.empty())
        return out;
    out.reserve(traj.states.size() * traj.states.front().size());
    for (const Field& state : traj.states)
        for (int c = 0; c < state.components(); ++c)
            for (const Complex& v : state.component(c))
                out.push_back(observable(c, v));
    return out;
}

/// Arithmetic mean of equally shaped sample series.
inline std::vector<Complex> ensemble_mean(const std::vector<std::vector<Complex>>& set) {
    if (set.empty())
        return {};
    std::vector<Complex> mean(set.front().size(), Complex{});
    for (const auto& series : set) {
        if (series.size() != mean.size())
            throw std::invalid_argument("ensemble_mean: size mismatch");
        for (std::size_t i = 0; i < mean.size(); ++i)
            mean[i] += series[i];
    }
    const double inv = 1.0 / static_cast<double>(set.size());
    for (auto& v : mean)
        v *= inv;
    return mean;
}

inline double max_abs(std::span<const Complex> v) {
    double m = 0.0;
    for (const auto& x : v)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace trigpde

#endif
