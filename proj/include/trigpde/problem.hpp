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

#ifndef TRIGPDE_PROBLEM_HPP
#define TRIGPDE_PROBLEM_HPP

#include <functional>
#include <string>

#include "trigpde/operators.hpp"

namespace trigpde {

/// Pointwise derivative function g: given time, position, the field values
/// and first spatial derivatives of every component at one lattice point,
/// writes the non-linear part of du/dt per component.
using DerivativeFn =
    std::function<void(double t, double x, std::span<const Complex> u,
                       std::span<const Complex> du_dx, std::span<Complex> out)>;

/// Exact analytic solution, per component.
using ExactFn = std::function<Complex(int component, double t, double x)>;

/// Pointwise observable applied before error comparison (e.g. Re, |.|^2).
using ObservableFn = std::function<Complex(int component, Complex value)>;

inline ObservableFn identity_observable() {
    return [](int, Complex v) { return v; };
}

/// One benchmark: equation, domain, boundaries, initial data and the exact
/// solution it is compared against.
struct Problem {
    std::string id;
    int components = 1;
    Grid grid;
    TimeGrid time;
    LinearCoefficients coeffs;
    BoundarySpec boundary;
    DerivativeFn g;                 // null means g == 0
    bool g_uses_gradient = false;   // request du_dx for g
    std::function<Complex(int component, double x)> init;
    ExactFn exact;                  // optional
    ObservableFn observable = identity_observable();
    double noise_amplitude = 0.0;   // additive noise strength; 0 = deterministic
    double error_normalization = 0.0; // 0 = use the global max of the numerics

    Field initial_field() const {
        Field f(components, {static_cast<std::size_t>(grid.n)});
        for (int c = 0; c < components; ++c) {
            auto comp = f.component(c);
            for (int j = 0; j < grid.n; ++j)
                comp[j] = init(c, grid.point(j));
        }
        return f;
    }

    Field exact_field(double t) const {
        if (!exact)
            throw std::logic_error("Problem: no exact solution available");
        Field f(components, {static_cast<std::size_t>(grid.n)});
        for (int c = 0; c < components; ++c) {
            auto comp = f.component(c);
            for (int j = 0; j < grid.n; ++j)
                comp[j] = exact(c, t, grid.point(j));
        }
        return f;
    }

    /// Rebuild the time grid with a different step count (bench rows vary dt).
    Problem with_steps(int n_steps) const {
        Problem p = *this;
        p.time = TimeGrid(time.t0, time.t1, n_steps);
        return p;
    }
};

} // namespace trigpde

#endif
