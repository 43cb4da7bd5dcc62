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

#include "trigpde/problems.hpp"

using namespace trigpde;

namespace {
constexpr double kPi = std::numbers::pi;

// Central-difference residual of du/dt = d2 u_xx + g at one interior point.
double pde_residual(const Problem& pb, int c, double t, double x) {
    const double ht = 1e-5 * (pb.time.t1 - pb.time.t0);
    const double hx = 1e-4 * (pb.grid.x_b - pb.grid.x_a);
    const Complex dt_u =
        (pb.exact(c, t + ht, x) - pb.exact(c, t - ht, x)) / Complex{2.0 * ht, 0.0};
    const Complex uxx = (pb.exact(c, t, x + hx) - 2.0 * pb.exact(c, t, x) +
                         pb.exact(c, t, x - hx)) /
                        Complex{hx * hx, 0.0};
    std::vector<Complex> u(pb.components), du(pb.components), g(pb.components);
    for (int cc = 0; cc < pb.components; ++cc)
        u[cc] = pb.exact(cc, t, x);
    if (pb.g)
        pb.g(t, x, u, du, g);
    const Complex res = dt_u - pb.coeffs.at(c) * uxx - g[c];
    return std::abs(res);
}

double exact_scale(const Problem& pb, int c, double t) {
    double m = 0.0;
    for (int j = 0; j < pb.grid.n; ++j)
        m = std::max(m, std::abs(pb.exact(c, t, pb.grid.point(j))));
    return m;
}
} // namespace

TEST_CASE("catalog exact solutions satisfy their equations", "[problems]") {
    const std::vector<Problem> catalog = {
        problems::heat_zero_boundary("DD"),
        problems::heat_zero_boundary("NN"),
        problems::heat_nonperiodic("DN"),
        problems::heat_nonperiodic("ND"),
        problems::nlse_shifted_soliton("DD"),
        problems::nlse_soliton_td_boundary("NN"),
        problems::peregrine("DD"),
        problems::breather("ND"),
        problems::double_simulton("DD", "NN"),
        problems::triple_simulton(),
    };
    for (const Problem& pb : catalog) {
        const double t = pb.time.t0 + 0.37 * (pb.time.t1 - pb.time.t0);
        for (int c = 0; c < pb.components; ++c) {
            const double scale = std::max(1.0, exact_scale(pb, c, t));
            for (double frac : {0.25, 0.5, 0.75}) {
                const double x = pb.grid.x_a + frac * (pb.grid.x_b - pb.grid.x_a);
                INFO(pb.id << " component " << c << " x=" << x);
                REQUIRE(pde_residual(pb, c, t, x) < 1e-4 * scale);
            }
        }
    }
}

TEST_CASE("boundary values are sampled from the exact solution", "[problems]") {
    const std::vector<Problem> catalog = {
        problems::nlse_soliton_td_boundary("DD"),
        problems::peregrine("NN"),
        problems::breather("DN"),
        problems::double_simulton("ND", "DD"),
    };
    const double hx = 1e-6;
    for (const Problem& pb : catalog) {
        const double t = pb.time.t0 + 0.61 * (pb.time.t1 - pb.time.t0);
        for (int c = 0; c < pb.components; ++c) {
            const auto& pair = pb.boundary.at(c);
            const double ends[2] = {pb.grid.x_a, pb.grid.x_b};
            const BoundaryKind kinds[2] = {pair.kind_a, pair.kind_b};
            const BoundaryValueFn fns[2] = {pair.value_a, pair.value_b};
            for (int e = 0; e < 2; ++e) {
                INFO(pb.id << " component " << c << " end " << e);
                if (kinds[e] == BoundaryKind::Dirichlet) {
                    REQUIRE(std::abs(fns[e](t) - pb.exact(c, t, ends[e])) < 1e-12);
                } else {
                    const Complex slope = (pb.exact(c, t, ends[e] + hx) -
                                           pb.exact(c, t, ends[e] - hx)) /
                                          Complex{2.0 * hx, 0.0};
                    REQUIRE(std::abs(fns[e](t) - slope) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("breather slope matches numeric differentiation of the solution",
          "[problems]") {
    Problem pb = problems::breather("NN");
    const auto& pair = pb.boundary.at(0);
    const double hx = 1e-6;
    for (double t : {0.1, 1.0, 2.5}) {
        const Complex left = (pb.exact(0, t, pb.grid.x_a + hx) -
                              pb.exact(0, t, pb.grid.x_a - hx)) /
                             Complex{2.0 * hx, 0.0};
        const Complex right = (pb.exact(0, t, pb.grid.x_b + hx) -
                               pb.exact(0, t, pb.grid.x_b - hx)) /
                              Complex{2.0 * hx, 0.0};
        REQUIRE(std::abs(pair.value_a(t) - left) < 1e-6);
        REQUIRE(std::abs(pair.value_b(t) - right) < 1e-6);
    }
}

TEST_CASE("peregrine and simulton magnitudes peak at their normalizations",
          "[problems]") {
    Problem per = problems::peregrine("DD");
    REQUIRE(std::norm(per.exact(0, 0.0, 0.0)) == Catch::Approx(9.0));
    REQUIRE(per.error_normalization == 9.0);

    Problem sim = problems::double_simulton("DD", "NN");
    REQUIRE(std::abs(sim.exact(0, 0.0, 0.0)) == Catch::Approx(1.5));
    REQUIRE(std::abs(sim.exact(1, 0.0, 0.0)) == Catch::Approx(1.5));
    REQUIRE(sim.error_normalization == 1.5);
}

TEST_CASE("stochastic heat expectation series", "[problems]") {
    // J(0) = 0 and J grows monotonically to L^2/6
    REQUIRE(problems::stochastic_heat_j(0.0) == 0.0);
    double prev = 0.0;
    for (double t : {0.01, 0.1, 0.5, 1.0, 4.0}) {
        const double j = problems::stochastic_heat_j(t);
        REQUIRE(j > prev);
        prev = j;
    }
    REQUIRE(problems::stochastic_heat_j(1e4) == Catch::Approx(25.0 / 6.0));

    // independent slow oracle: direct partial sums of the mode series
    const double length = 5.0;
    for (double t : {0.05, 0.3, 1.0}) {
        double oracle = 0.0;
        const int n_max = 200000;
        for (int n = 1; n <= n_max; ++n) {
            const double rate = double(n) * n * kPi * kPi / (length * length);
            oracle += (1.0 - std::exp(-rate * t)) / rate;
        }
        REQUIRE(problems::stochastic_heat_j(t, length, n_max) ==
                Catch::Approx(oracle).epsilon(1e-12));
        // the full series adds the 1/n^2 flat-part tail beyond n_max
        const double nd = n_max;
        const double tail = (length * length / (kPi * kPi)) *
                            (1.0 / nd - 0.5 / (nd * nd) + 1.0 / (6.0 * nd * nd * nd));
        REQUIRE(problems::stochastic_heat_j(t, length) ==
                Catch::Approx(oracle + tail).epsilon(1e-9));
    }

    // truncation only removes mass
    REQUIRE(problems::stochastic_heat_j(0.5, length, 99) <
            problems::stochastic_heat_j(0.5, length));
}

TEST_CASE("discrete scheme expectation approaches the resolved series",
          "[problems]") {
    const double length = 5.0;
    const int n_modes = 99;
    const double t = 0.5;
    double prev_gap = 1e300;
    for (int steps : {500, 2000, 8000}) {
        const double dt = t / steps;
        const double jd =
            problems::stochastic_heat_j_discrete(steps, dt, length, n_modes);
        const double ja = problems::stochastic_heat_j(t, length, n_modes);
        const double gap = std::abs(jd - ja);
        REQUIRE(gap < prev_gap);
        prev_gap = gap;
    }
    REQUIRE(prev_gap < 1e-4);

    // zero steps means zero field
    REQUIRE(problems::stochastic_heat_j_discrete(0, 1e-3, length, n_modes) == 0.0);
}

TEST_CASE("catalog lookup by name", "[problems]") {
    Problem p = problems::by_name("heat-zero", "NN");
    REQUIRE(p.id == "heat-zero-NN");
    REQUIRE(p.grid.n == 21);
    REQUIRE(p.time.n_steps == 2000);

    Problem q = problems::by_name("peregrine", "DN", 41, 100);
    REQUIRE(q.grid.n == 41);
    REQUIRE(q.time.n_steps == 100);

    Problem s = problems::by_name("double-simulton", "DN;ND");
    REQUIRE(s.components == 2);
    REQUIRE(s.boundary.at(0).kind_a == BoundaryKind::Dirichlet);
    REQUIRE(s.boundary.at(1).kind_b == BoundaryKind::Dirichlet);

    REQUIRE_THROWS_AS(problems::by_name("no-such-problem"), std::invalid_argument);
    REQUIRE_THROWS_AS(problems::by_name("heat-zero", "DN"), std::invalid_argument);
    REQUIRE_THROWS_AS(problems::by_name("double-simulton", "DDNN"),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(problems::kind_from_char('X'), std::invalid_argument);
}
