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
#include <random>
#include <vector>

#include "trigpde/transforms.hpp"

using trigpde::Complex;
using trigpde::Direction;
using trigpde::Field;
using trigpde::TransformKind;
using trigpde::TransformPlan;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& x : v)
        x = Complex{dist(rng), dist(rng)};
    return v;
}

// Naive O(N^2) sums of the defining formulas, used as oracles.
std::vector<Complex> naive_transform(TransformKind kind, const std::vector<Complex>& x) {
    const int m = static_cast<int>(x.size());
    std::vector<Complex> y(m, Complex{});
    switch (kind) {
        case TransformKind::Fft:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += x[j] * std::exp(Complex{0.0, -2.0 * kPi * j * n / m});
            break;
        case TransformKind::Dst1:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::sin(kPi * (j + 1) * (n + 1) / (m + 1));
            break;
        case TransformKind::Dct1:
            for (int n = 0; n < m; ++n) {
                y[n] = x[0] + (n % 2 == 0 ? 1.0 : -1.0) * x[m - 1];
                for (int j = 1; j <= m - 2; ++j)
                    y[n] += 2.0 * x[j] * std::cos(kPi * j * n / (m - 1));
            }
            break;
        case TransformKind::Dst2:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::sin(kPi * (j + 0.5) * (n + 1) / m);
            break;
        case TransformKind::Dst3:
            for (int n = 0; n < m; ++n) {
                y[n] = (n % 2 == 0 ? 1.0 : -1.0) * x[m - 1];
                for (int j = 0; j <= m - 2; ++j)
                    y[n] += 2.0 * x[j] * std::sin(kPi * (j + 1) * (n + 0.5) / m);
            }
            break;
        case TransformKind::Dct2:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::cos(kPi * (j + 0.5) * n / m);
            break;
        case TransformKind::Dct3:
            for (int n = 0; n < m; ++n) {
                y[n] = x[0];
                for (int j = 1; j <= m - 1; ++j)
                    y[n] += 2.0 * x[j] * std::cos(kPi * j * (n + 0.5) / m);
            }
            break;
    }
    return y;
}

int points_for(TransformKind kind, int n_transform) {
    switch (kind) {
        case TransformKind::Fft: return n_transform;
        case TransformKind::Dst1: return n_transform + 2;
        case TransformKind::Dct1: return n_transform;
        default: return n_transform + 1;
    }
}

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& x : v)
        m = std::max(m, std::abs(x));
    return m;
}

const TransformKind kAllKinds[] = {TransformKind::Fft,  TransformKind::Dst1,
                                   TransformKind::Dct1, TransformKind::Dst2,
                                   TransformKind::Dst3, TransformKind::Dct2,
                                   TransformKind::Dct3};

} // namespace

TEST_CASE("forward transforms match naive definitional sums", "[transforms]") {
    for (TransformKind kind : kAllKinds) {
        for (int nt = 4; nt <= 64; ++nt) {
            auto plan = TransformPlan::create(kind, points_for(kind, nt));
            REQUIRE(plan.n_transform == nt);
            auto x = random_vector(nt, 1000u + nt);
            std::vector<Complex> y(nt);
            trigpde::forward(plan, x, y);
            auto expect = naive_transform(kind, x);
            const double scale = max_abs(expect);
            for (int n = 0; n < nt; ++n) {
                INFO(trigpde::to_string(kind) << " nt=" << nt << " n=" << n);
                REQUIRE(std::abs(y[n] - expect[n]) < 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("inverse undoes forward for all kinds and sizes", "[transforms]") {
    for (TransformKind kind : kAllKinds) {
        for (int nt = 4; nt <= 64; ++nt) {
            auto plan = TransformPlan::create(kind, points_for(kind, nt));
            auto x = random_vector(nt, 2000u + nt);
            std::vector<Complex> y(nt), back(nt);
            trigpde::forward(plan, x, y);
            trigpde::inverse(plan, y, back);
            const double scale = max_abs(x);
            for (int j = 0; j < nt; ++j) {
                INFO(trigpde::to_string(kind) << " nt=" << nt << " j=" << j);
                REQUIRE(std::abs(back[j] - x[j]) < 1e-13 * scale);
            }
        }
    }
}

TEST_CASE("transforms are linear", "[transforms]") {
    for (TransformKind kind : kAllKinds) {
        const int nt = 19;
        auto plan = TransformPlan::create(kind, points_for(kind, nt));
        auto a = random_vector(nt, 31);
        auto b = random_vector(nt, 32);
        const Complex alpha{0.7, -0.3}, beta{-1.1, 0.4};
        std::vector<Complex> combo(nt), ta(nt), tb(nt), tc(nt);
        for (int j = 0; j < nt; ++j)
            combo[j] = alpha * a[j] + beta * b[j];
        trigpde::forward(plan, a, ta);
        trigpde::forward(plan, b, tb);
        trigpde::forward(plan, combo, tc);
        for (int n = 0; n < nt; ++n)
            REQUIRE(std::abs(tc[n] - (alpha * ta[n] + beta * tb[n])) < 1e-12 * max_abs(tc));
    }
}

TEST_CASE("zero input maps to zero for all kinds", "[transforms]") {
    for (TransformKind kind : kAllKinds) {
        const int nt = 8;
        auto plan = TransformPlan::create(kind, points_for(kind, nt));
        std::vector<Complex> x(nt, Complex{}), y(nt, Complex{1.0, 1.0});
        trigpde::forward(plan, x, y);
        for (const auto& v : y)
            REQUIRE(std::abs(v) == 0.0);
    }
}

TEST_CASE("sine-basis transform resolves a pure interior mode", "[transforms]") {
    const int nt = 7;
    auto plan = TransformPlan::create(TransformKind::Dst1, nt + 2);
    std::vector<Complex> x(nt), y(nt);
    for (int j = 0; j < nt; ++j)
        x[j] = std::sin(kPi * (j + 1) / (nt + 1));
    trigpde::forward(plan, x, y);
    REQUIRE(std::abs(y[0] - Complex{8.0, 0.0}) < 1e-12);
    for (int n = 1; n < nt; ++n)
        REQUIRE(std::abs(y[n]) < 1e-12);

    std::vector<Complex> back(nt);
    std::vector<Complex> c(nt, Complex{});
    c[0] = 8.0;
    trigpde::inverse(plan, c, back);
    for (int j = 0; j < nt; ++j)
        REQUIRE(std::abs(back[j] - x[j]) < 1e-13);
}

TEST_CASE("cosine-basis transform maps a constant to the DC mode", "[transforms]") {
    const int nt = 9;
    auto plan = TransformPlan::create(TransformKind::Dct1, nt);
    REQUIRE(plan.n_logical == 16);
    std::vector<Complex> x(nt, Complex{1.0, 0.0}), y(nt);
    trigpde::forward(plan, x, y);
    REQUIRE(std::abs(y[0] - Complex{16.0, 0.0}) < 1e-12);
    for (int n = 1; n < nt; ++n)
        REQUIRE(std::abs(y[n]) < 1e-12);
}

TEST_CASE("half-shifted sine transform resolves a half-point mode", "[transforms]") {
    const int nt = 12;
    auto plan = TransformPlan::create(TransformKind::Dst2, nt + 1);
    std::vector<Complex> x(nt), y(nt);
    for (int j = 0; j < nt; ++j)
        x[j] = std::sin(kPi * (j + 0.5) / nt);
    trigpde::forward(plan, x, y);
    REQUIRE(std::abs(y[0] - Complex{static_cast<double>(nt), 0.0}) < 1e-12 * nt);
    for (int n = 1; n < nt; ++n)
        REQUIRE(std::abs(y[n]) < 1e-12 * nt);
}

TEST_CASE("sine synthesis vanishes at the true grid endpoints", "[transforms]") {
    const int nt = 16;
    auto plan = TransformPlan::create(TransformKind::Dst1, nt + 2);
    auto a = random_vector(nt, 77);
    std::vector<Complex> c(nt);
    trigpde::forward(plan, a, c);
    // Synthesize the inverse sum at the endpoints j = 0 and j = N-1 of the
    // physical grid, where every sine basis function is zero.
    for (double endpoint : {0.0, static_cast<double>(nt + 1)}) {
        Complex value{};
        for (int n = 0; n < nt; ++n)
            value += 2.0 * c[n] * std::sin(kPi * endpoint * (n + 1) / (nt + 1)) /
                     static_cast<double>(plan.n_logical);
        REQUIRE(std::abs(value) < 1e-12 * max_abs(a));
    }
}

TEST_CASE("transform applies independently along each dimension", "[transforms]") {
    const int nx = 9, ny = 11;
    Field f(1, {static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)});
    auto plan_x = TransformPlan::create(TransformKind::Dst1, nx + 2);
    auto plan_y = TransformPlan::create(TransformKind::Dst1, ny + 2);
    const int mode_x = 2, mode_y = 4;
    auto comp = f.component(0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            comp[i * ny + j] = std::sin(kPi * (i + 1) * (mode_x + 1) / (nx + 1)) *
                               std::sin(kPi * (j + 1) * (mode_y + 1) / (ny + 1));

    trigpde::apply_along_dimension(f, 0, plan_x, Direction::Forward);
    trigpde::apply_along_dimension(f, 1, plan_y, Direction::Forward);

    const double expect = (nx + 1) * (ny + 1);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const Complex v = comp[i * ny + j];
            if (i == mode_x && j == mode_y)
                REQUIRE(std::abs(v - Complex{expect, 0.0}) < 1e-11 * expect);
            else
                REQUIRE(std::abs(v) < 1e-11 * expect);
        }

    trigpde::apply_along_dimension(f, 1, plan_y, Direction::Inverse);
    trigpde::apply_along_dimension(f, 0, plan_x, Direction::Inverse);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double orig = std::sin(kPi * (i + 1) * (mode_x + 1) / (nx + 1)) *
                                std::sin(kPi * (j + 1) * (mode_y + 1) / (ny + 1));
            REQUIRE(std::abs(comp[i * ny + j] - Complex{orig, 0.0}) < 1e-12);
        }
}

TEST_CASE("plan validation rejects undersized grids and mismatched lengths",
          "[transforms]") {
    REQUIRE_THROWS_AS(TransformPlan::create(TransformKind::Dct1, 1),
                      trigpde::InvalidPlanError);
    REQUIRE_THROWS_AS(TransformPlan::create(TransformKind::Dst1, 2),
                      trigpde::InvalidPlanError);
    REQUIRE_THROWS_AS(TransformPlan::create(TransformKind::Dst2, 1),
                      trigpde::InvalidPlanError);

    auto plan = TransformPlan::create(TransformKind::Dst1, 10);
    std::vector<Complex> wrong(plan.n_transform + 1), out(plan.n_transform + 1);
    REQUIRE_THROWS_AS(trigpde::forward(plan, wrong, out), trigpde::InvalidPlanError);
}

TEST_CASE("plan bookkeeping matches the grid-point conventions", "[transforms]") {
    auto dst1 = TransformPlan::create(TransformKind::Dst1, 21);
    REQUIRE(dst1.n_transform == 19);
    REQUIRE(dst1.n_logical == 40);

    auto dct1 = TransformPlan::create(TransformKind::Dct1, 21);
    REQUIRE(dct1.n_transform == 21);
    REQUIRE(dct1.n_logical == 40);

    for (TransformKind kind : {TransformKind::Dst2, TransformKind::Dst3,
                               TransformKind::Dct2, TransformKind::Dct3}) {
        auto plan = TransformPlan::create(kind, 21);
        REQUIRE(plan.n_transform == 20);
        REQUIRE(plan.n_logical == 40);
    }

    auto fft = TransformPlan::create(TransformKind::Fft, 16);
    REQUIRE(fft.n_transform == 16);
    REQUIRE(fft.n_logical == 16);
}
