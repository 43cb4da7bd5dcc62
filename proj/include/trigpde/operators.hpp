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

#ifndef TRIGPDE_OPERATORS_HPP
#define TRIGPDE_OPERATORS_HPP

#include <cmath>
#include <vector>

#include "trigpde/boundaries.hpp"
#include "trigpde/grid.hpp"

namespace trigpde {

/// Complex coefficient of the second spatial derivative, one per component.
struct LinearCoefficients {
    std::vector<Complex> d2;

    Complex at(int component) const { return d2.at(component); }
    static LinearCoefficients uniform(int components, Complex value) {
        return LinearCoefficients{std::vector<Complex>(components, value)};
    }
};

/// Transform bookkeeping for one field component on one grid: which lattice
/// points are transformed and the wavenumber of each mode.
struct ComponentSpectral {
    TransformPlan plan;
    int start = 0; // first lattice index entering the transform
    std::vector<double> k;

    static ComponentSpectral create(const BoundaryPair& pair, const Grid& grid) {
        ComponentSpectral cs;
        const TransformKind kind = transform_kind(pair.kind_a, pair.kind_b);
        cs.plan = TransformPlan::create(kind, grid.n);
        cs.start = transform_start(kind);
        cs.k = build_wavenumbers(cs.plan, grid);
        return cs;
    }
};

inline std::vector<ComponentSpectral> make_spectral(const BoundarySpec& spec,
                                                    const Grid& grid) {
    std::vector<ComponentSpectral> out;
    out.reserve(spec.pairs.size());
    for (std::size_t v = 0; v < spec.pairs.size(); ++v)
        out.push_back(ComponentSpectral::create(spec.at(static_cast<int>(v)), grid));
    return out;
}

/// Second derivative of one component, evaluated spectrally: extract the
/// transformed points, multiply each mode by -k^2, synthesize back. Lattice
/// points outside the transform are Dirichlet-pinned ends where every basis
/// function vanishes, so the result is zero there.
inline void spectral_laplacian(std::span<const Complex> u, const ComponentSpectral& cs,
                               std::span<Complex> out) {
    const int nt = cs.plan.n_transform;
    std::vector<Complex> a(nt), c(nt);
    for (int j = 0; j < nt; ++j)
        a[j] = u[cs.start + j];
    forward(cs.plan, a, c);
    for (int n = 0; n < nt; ++n)
        c[n] *= -cs.k[n] * cs.k[n];
    inverse(cs.plan, c, a);
    for (auto& v : out)
        v = Complex{};
    for (int j = 0; j < nt; ++j)
        out[cs.start + j] = a[j];
}

/// D^(2) * d^2u/dx^2 for every component of a 1D field.
inline Field spectral_laplacian(const Field& v, const Grid& grid,
                                const LinearCoefficients& coeffs,
                                const std::vector<ComponentSpectral>& spectral) {
    if (v.rank() != 1 || static_cast<int>(v.shape()[0]) != grid.n)
        throw std::invalid_argument("spectral_laplacian: field/grid mismatch");
    Field out = Field::like(v);
    for (int c = 0; c < v.components(); ++c) {
        spectral_laplacian(v.component(c), spectral[c], out.component(c));
        const Complex d2 = coeffs.at(c);
        for (auto& x : out.component(c))
            x *= d2;
    }
    return out;
}

/// Diagonal spectral propagator exp(tau * D^(2) * (-k^2)) per component mode.
struct Propagator {
    std::vector<std::vector<Complex>> factors;
    double tau = 0.0;

    static Propagator build(const LinearCoefficients& coeffs,
                            const std::vector<ComponentSpectral>& spectral, double tau) {
        Propagator p;
        p.tau = tau;
        p.factors.resize(spectral.size());
        for (std::size_t c = 0; c < spectral.size(); ++c) {
            const auto& k = spectral[c].k;
            p.factors[c].resize(k.size());
            for (std::size_t n = 0; n < k.size(); ++n)
                p.factors[c][n] = std::exp(-coeffs.at(static_cast<int>(c)) * k[n] *
                                           k[n] * tau);
        }
        return p;
    }

    void apply(int component, std::span<Complex> modes) const {
        const auto& f = factors[component];
        for (std::size_t n = 0; n < modes.size(); ++n)
            modes[n] *= f[n];
    }
};

/// Central second-order finite-difference Laplacian of one component.
/// Neumann ends are closed with a ghost point built from the derivative
/// value; Dirichlet ends are pinned by the integrator, so their rows are
/// left at zero. Periodic wraps the stencil.
inline void fd_laplacian(std::span<const Complex> u, const Grid& grid,
                         const BoundaryPair& pair, double t, std::span<Complex> out) {
    const int n = grid.n;
    const double h2 = grid.dx() * grid.dx();
    for (int j = 1; j < n - 1; ++j)
        out[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) / h2;
    if (pair.periodic()) {
        out[0] = (u[n - 1] - 2.0 * u[0] + u[1]) / h2;
        out[n - 1] = (u[n - 2] - 2.0 * u[n - 1] + u[0]) / h2;
        return;
    }
    if (pair.kind_a == BoundaryKind::Neumann) {
        const Complex ghost = u[1] - 2.0 * grid.dx() * pair.value_a(t);
        out[0] = (ghost - 2.0 * u[0] + u[1]) / h2;
    } else {
        out[0] = Complex{};
    }
    if (pair.kind_b == BoundaryKind::Neumann) {
        const Complex ghost = u[n - 2] + 2.0 * grid.dx() * pair.value_b(t);
        out[n - 1] = (u[n - 2] - 2.0 * u[n - 1] + ghost) / h2;
    } else {
        out[n - 1] = Complex{};
    }
}

/// Central second-order first derivative; one-sided 2nd-order at the ends.
inline void fd_gradient(std::span<const Complex> u, const Grid& grid,
                        std::span<Complex> out) {
    const int n = grid.n;
    const double h = grid.dx();
    for (int j = 1; j < n - 1; ++j)
        out[j] = (u[j + 1] - u[j - 1]) / (2.0 * h);
    out[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    out[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
}

} // namespace trigpde

#endif
