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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "trigpde/operators.hpp"

using namespace trigpde;

namespace {
constexpr double kPi = std::numbers::pi;

ComponentSpectral spectral_for(BoundaryKind a, BoundaryKind b, const Grid& grid) {
    return ComponentSpectral::create(make_pair(a, b), grid);
}
} // namespace

TEST_CASE("spectral second derivative is exact on sine eigenfunctions",
          "[operators]") {
    Grid grid(0.0, kPi, 21);
    auto cs = spectral_for(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet, grid);
    std::vector<Complex> u(grid.n), lap(grid.n);
    for (int j = 0; j < grid.n; ++j)
        u[j] = std::sin(grid.point(j));
    spectral_laplacian(u, cs, lap);
    for (int j = 0; j < grid.n; ++j)
        REQUIRE(std::abs(lap[j] + std::sin(grid.point(j))) < 1e-12);

    // linear combination: 4 sin(x) + sin(2x) -> -4 sin(x) - 4 sin(2x)
    for (int j = 0; j < grid.n; ++j)
        u[j] = 4.0 * std::sin(grid.point(j)) + std::sin(2.0 * grid.point(j));
    spectral_laplacian(u, cs, lap);
    for (int j = 0; j < grid.n; ++j) {
        const double expect =
            -4.0 * std::sin(grid.point(j)) - 4.0 * std::sin(2.0 * grid.point(j));
        REQUIRE(std::abs(lap[j] - Complex{expect, 0.0}) < 1e-11);
    }
}

TEST_CASE("spectral second derivative kills constants on cosine grids",
          "[operators]") {
    Grid grid(0.0, kPi, 21);
    auto cs = spectral_for(BoundaryKind::Neumann, BoundaryKind::Neumann, grid);
    std::vector<Complex> u(grid.n, Complex{3.5, -1.0}), lap(grid.n);
    spectral_laplacian(u, cs, lap);
    for (int j = 0; j < grid.n; ++j)
        REQUIRE(std::abs(lap[j]) < 1e-12);

    for (int j = 0; j < grid.n; ++j)
        u[j] = std::cos(2.0 * grid.point(j));
    spectral_laplacian(u, cs, lap);
    for (int j = 0; j < grid.n; ++j)
        REQUIRE(std::abs(lap[j] + 4.0 * std::cos(2.0 * grid.point(j))) < 1e-11);
}

TEST_CASE("spectral second derivative handles half-integer modes", "[operators]") {
    Grid grid(0.0, kPi, 21);
    // D-N: sin((n+1/2)x) on [0, pi] vanishes at 0 with zero slope at pi
    auto dn = spectral_for(BoundaryKind::Dirichlet, BoundaryKind::Neumann, grid);
    std::vector<Complex> u(grid.n), lap(grid.n);
    const double k = 1.5;
    for (int j = 0; j < grid.n; ++j)
        u[j] = std::sin(k * grid.point(j));
    spectral_laplacian(u, dn, lap);
    for (int j = 1; j < grid.n; ++j)
        REQUIRE(std::abs(lap[j] + k * k * std::sin(k * grid.point(j))) < 1e-11);

    auto nd = spectral_for(BoundaryKind::Neumann, BoundaryKind::Dirichlet, grid);
    for (int j = 0; j < grid.n; ++j)
        u[j] = std::cos(0.5 * grid.point(j));
    spectral_laplacian(u, nd, lap);
    for (int j = 0; j < grid.n - 1; ++j)
        REQUIRE(std::abs(lap[j] + 0.25 * std::cos(0.5 * grid.point(j))) < 1e-11);
}

TEST_CASE("field-level Laplacian scales by the linear coefficient", "[operators]") {
    Grid grid(0.0, kPi, 17);
    BoundarySpec spec = BoundarySpec::uniform(
        1, make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet));
    auto spectral = make_spectral(spec, grid);
    auto coeffs = LinearCoefficients::uniform(1, Complex{0.0, 0.5});
    Field f(1, {static_cast<std::size_t>(grid.n)});
    for (int j = 0; j < grid.n; ++j)
        f.component(0)[j] = std::sin(grid.point(j));
    Field out = spectral_laplacian(f, grid, coeffs, spectral);
    for (int j = 0; j < grid.n; ++j) {
        const Complex expect = Complex{0.0, -0.5} * std::sin(grid.point(j));
        REQUIRE(std::abs(out.component(0)[j] - expect) < 1e-12);
    }
}

TEST_CASE("propagator factors follow the mode decay law", "[operators]") {
    Grid grid(0.0, kPi, 22); // dk = 1: k = 1..20
    BoundarySpec spec = BoundarySpec::uniform(
        1, make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet));
    auto spectral = make_spectral(spec, grid);

    auto heat = LinearCoefficients::uniform(1, 1.0);
    Propagator p = Propagator::build(heat, spectral, 0.5);
    REQUIRE(std::abs(p.factors[0][0] - Complex{std::exp(-0.5), 0.0}) < 1e-14);

    Propagator ident = Propagator::build(heat, spectral, 0.0);
    for (const auto& f : ident.factors[0])
        REQUIRE(std::abs(f - Complex{1.0, 0.0}) < 1e-15);

    // unitary for Schrodinger coefficients; forward then backward is identity
    auto nlse = LinearCoefficients::uniform(1, Complex{0.0, 0.5});
    Propagator fwd = Propagator::build(nlse, spectral, 0.25);
    Propagator bwd = Propagator::build(nlse, spectral, -0.25);
    for (std::size_t n = 0; n < fwd.factors[0].size(); ++n) {
        REQUIRE(std::abs(std::abs(fwd.factors[0][n]) - 1.0) < 1e-14);
        REQUIRE(std::abs(fwd.factors[0][n] * bwd.factors[0][n] - Complex{1.0, 0.0}) <
                1e-14);
    }
}

TEST_CASE("finite-difference Laplacian is exact on quadratics", "[operators]") {
    Grid grid(0.0, 2.0, 15);
    auto pair = make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet);
    std::vector<Complex> u(grid.n), lap(grid.n);
    for (int j = 0; j < grid.n; ++j)
        u[j] = grid.point(j) * grid.point(j);
    fd_laplacian(u, grid, pair, 0.0, lap);
    for (int j = 1; j < grid.n - 1; ++j)
        REQUIRE(std::abs(lap[j] - Complex{2.0, 0.0}) < 1e-11);
}

TEST_CASE("finite-difference Laplacian error follows the Taylor remainder",
          "[operators]") {
    Grid grid(0.0, kPi, 21);
    auto pair = make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet);
    std::vector<Complex> u(grid.n), lap(grid.n);
    for (int j = 0; j < grid.n; ++j)
        u[j] = std::sin(grid.point(j));
    fd_laplacian(u, grid, pair, 0.0, lap);
    const double h2_12 = grid.dx() * grid.dx() / 12.0;
    for (int j = 1; j < grid.n - 1; ++j) {
        const double s = std::sin(grid.point(j));
        const double err = std::abs(lap[j] + s);
        REQUIRE(err <= 1.2 * h2_12 * std::abs(s) + 1e-12);
        if (std::abs(s) > 0.5)
            REQUIRE(err >= 0.8 * h2_12 * std::abs(s));
    }
}

TEST_CASE("finite-difference Neumann closure reproduces the ghost-point slope",
          "[operators]") {
    Grid grid(0.0, 1.0, 11);
    // u = x^2: slope 0 at x=0 and 2 at x=1; Laplacian exactly 2 everywhere
    auto pair = make_pair(BoundaryKind::Neumann, BoundaryKind::Neumann,
                          [](double) { return Complex{0.0, 0.0}; },
                          [](double) { return Complex{2.0, 0.0}; });
    std::vector<Complex> u(grid.n), lap(grid.n);
    for (int j = 0; j < grid.n; ++j)
        u[j] = grid.point(j) * grid.point(j);
    fd_laplacian(u, grid, pair, 0.0, lap);
    for (int j = 0; j < grid.n; ++j)
        REQUIRE(std::abs(lap[j] - Complex{2.0, 0.0}) < 1e-10);
}

TEST_CASE("zero field with zero boundaries has zero Laplacian", "[operators]") {
    Grid grid(0.0, 1.0, 9);
    auto pair = make_pair(BoundaryKind::Neumann, BoundaryKind::Dirichlet);
    std::vector<Complex> u(grid.n, Complex{}), lap(grid.n, Complex{1.0, 1.0});
    fd_laplacian(u, grid, pair, 0.0, lap);
    for (const auto& v : lap)
        REQUIRE(std::abs(v) == 0.0);
}

TEST_CASE("spectral error stays at rounding while FD error scales as dx^2",
          "[operators]") {
    std::vector<double> log_h, log_e;
    auto pair = make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet);
    for (int n : {11, 21, 41, 81, 161}) {
        Grid grid(0.0, kPi, n);
        std::vector<Complex> u(grid.n), lap(grid.n);
        for (int j = 0; j < grid.n; ++j)
            u[j] = std::sin(grid.point(j));

        auto cs = spectral_for(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet, grid);
        spectral_laplacian(u, cs, lap);
        double spectral_err = 0.0;
        for (int j = 0; j < grid.n; ++j)
            spectral_err = std::max(spectral_err,
                                    std::abs(lap[j] + std::sin(grid.point(j))));
        REQUIRE(spectral_err < 1e-11);

        fd_laplacian(u, grid, pair, 0.0, lap);
        double fd_err = 0.0;
        for (int j = 1; j < grid.n - 1; ++j)
            fd_err = std::max(fd_err, std::abs(lap[j] + std::sin(grid.point(j))));
        log_h.push_back(std::log(grid.dx()));
        log_e.push_back(std::log(fd_err));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(log_h.size());
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        sx += log_h[i];
        sy += log_e[i];
        sxx += log_h[i] * log_h[i];
        sxy += log_h[i] * log_e[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    REQUIRE(slope == Catch::Approx(2.0).margin(0.1));
}

TEST_CASE("first-derivative stencil is second order including the ends",
          "[operators]") {
    Grid grid(0.0, 1.0, 41);
    std::vector<Complex> u(grid.n), du(grid.n);
    for (int j = 0; j < grid.n; ++j)
        u[j] = std::exp(grid.point(j));
    fd_gradient(u, grid, du);
    for (int j = 0; j < grid.n; ++j)
        REQUIRE(std::abs(du[j] - std::exp(grid.point(j))) <
                2.0 * grid.dx() * grid.dx());
}
