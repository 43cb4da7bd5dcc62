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

#ifndef TRIGPDE_GRID_HPP
#define TRIGPDE_GRID_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "trigpde/transforms.hpp"

namespace trigpde {

/// Uniform spatial grid with points x_j = x_a + j*dx, j = 0..n-1, where both
/// interval ends are grid points: dx = (x_b - x_a)/(n - 1).
struct Grid {
    double x_a = 0.0;
    double x_b = 1.0;
    int n = 0;

    Grid() = default;
    Grid(double a, double b, int n_points) : x_a(a), x_b(b), n(n_points) {
        if (n < 2)
            throw std::invalid_argument("Grid: need at least 2 points");
        if (!(x_b > x_a))
            throw std::invalid_argument("Grid: x_b must exceed x_a");
    }

    double dx() const { return (x_b - x_a) / (n - 1); }
    double length() const { return x_b - x_a; }
    double point(int j) const { return x_a + j * dx(); }

    std::vector<double> points() const {
        std::vector<double> p(n);
        for (int j = 0; j < n; ++j)
            p[j] = point(j);
        return p;
    }
};

/// Uniform time grid with t_j = t0 + j*dt, j = 0..n_steps.
struct TimeGrid {
    double t0 = 0.0;
    double t1 = 1.0;
    int n_steps = 0;

    TimeGrid() = default;
    TimeGrid(double start, double end, int steps) : t0(start), t1(end), n_steps(steps) {
        if (n_steps < 1)
            throw std::invalid_argument("TimeGrid: need at least 1 step");
        if (!(t1 > t0))
            throw std::invalid_argument("TimeGrid: t1 must exceed t0");
    }

    double dt() const { return (t1 - t0) / n_steps; }
    double time(int j) const { return t0 + j * dt(); }
};

/// Wavenumber of each transformed mode. Integer-mode transforms use
/// k_n = m*pi/L with m = n+1 (sine) or m = n (cosine); half-integer-mode
/// transforms use k_n = (n+1/2)*pi/L, with L the grid length. The periodic
/// case uses the standard wrapped FFT ordering over the full grid.
inline std::vector<double> build_wavenumbers(const TransformPlan& plan, const Grid& grid) {
    if (plan.n_points != grid.n)
        throw InvalidPlanError("build_wavenumbers: plan/grid size mismatch");
    std::vector<double> k(plan.n_transform);
    const double pi = std::numbers::pi;
    switch (plan.kind) {
        case TransformKind::Fft: {
            const double dk = 2.0 * pi / (grid.n * grid.dx());
            for (int m = 0; m < plan.n_transform; ++m)
                k[m] = dk * (m <= grid.n / 2 ? m : m - grid.n);
            break;
        }
        case TransformKind::Dst1: {
            const double dk = pi / grid.length();
            for (int n = 0; n < plan.n_transform; ++n)
                k[n] = (n + 1) * dk;
            break;
        }
        case TransformKind::Dct1: {
            const double dk = pi / grid.length();
            for (int n = 0; n < plan.n_transform; ++n)
                k[n] = n * dk;
            break;
        }
        case TransformKind::Dst2:
        case TransformKind::Dst3:
        case TransformKind::Dct2:
        case TransformKind::Dct3: {
            const double dk = pi / grid.length();
            for (int n = 0; n < plan.n_transform; ++n)
                k[n] = (n + 0.5) * dk;
            break;
        }
    }
    return k;
}

} // namespace trigpde

#endif
