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

#ifndef TRIGPDE_PROBLEMS_HPP
#define TRIGPDE_PROBLEMS_HPP

#include <cmath>
#include <numbers>

#include "trigpde/problem.hpp"

namespace trigpde::problems {

constexpr double kPi = std::numbers::pi;
inline const Complex kI{0.0, 1.0};

inline double sech(double x) { return 1.0 / std::cosh(x); }

/// Boundary pair whose values are sampled from an exact solution: Dirichlet
/// ends take the solution value, Neumann ends its spatial derivative.
inline BoundaryPair pair_from_exact(BoundaryKind a, BoundaryKind b, double x_a,
                                    double x_b,
                                    std::function<Complex(double t, double x)> value,
                                    std::function<Complex(double t, double x)> slope) {
    auto fn = [&](BoundaryKind k, double x) -> BoundaryValueFn {
        if (k == BoundaryKind::Dirichlet)
            return [value, x](double t) { return value(t, x); };
        return [slope, x](double t) { return slope(t, x); };
    };
    return make_pair(a, b, fn(a, x_a), fn(b, x_b));
}

inline BoundaryKind kind_from_char(char c) {
    switch (c) {
        case 'D': return BoundaryKind::Dirichlet;
        case 'N': return BoundaryKind::Neumann;
        case 'P': return BoundaryKind::Periodic;
    }
    throw std::invalid_argument("boundary kind: expected D, N or P");
}

/// Heat equation on [0, pi] with zero boundary values, t in [0, 1].
/// D-D: a = 2 sin(x)e^{-t} + sin(2x)e^{-4t}
/// N-N: a = 2 + cos(x)e^{-t} + cos(2x)e^{-4t}
inline Problem heat_zero_boundary(const std::string& bc, int n_points = 21,
                                  int n_steps = 2000) {
    if (bc != "DD" && bc != "NN")
        throw std::invalid_argument("heat_zero_boundary: bc must be DD or NN");
    Problem p;
    p.id = "heat-zero-" + bc;
    p.grid = Grid(0.0, kPi, n_points);
    p.time = TimeGrid(0.0, 1.0, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, 1.0);
    const bool dd = bc == "DD";
    p.exact = [dd](int, double t, double x) -> Complex {
        if (dd)
            return 2.0 * std::sin(x) * std::exp(-t) + std::sin(2.0 * x) * std::exp(-4.0 * t);
        return 2.0 + std::cos(x) * std::exp(-t) + std::cos(2.0 * x) * std::exp(-4.0 * t);
    };
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    const BoundaryKind k = dd ? BoundaryKind::Dirichlet : BoundaryKind::Neumann;
    p.boundary = BoundarySpec::uniform(1, make_pair(k, k));
    return p;
}

/// Heat equation on [0, pi], t in [0, 4], one solution per boundary pair.
/// All four have zero boundary values at the interval ends.
inline Problem heat_nonperiodic(const std::string& bc, int n_points = 51,
                                int n_steps = 40) {
    Problem p;
    p.id = "heat-" + bc;
    p.grid = Grid(0.0, kPi, n_points);
    p.time = TimeGrid(0.0, 4.0, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, 1.0);
    if (bc == "DD")
        p.exact = [](int, double t, double x) -> Complex {
            return 4.0 * std::sin(x) * std::exp(-t) + std::sin(2.0 * x) * std::exp(-4.0 * t);
        };
    else if (bc == "NN")
        p.exact = [](int, double t, double x) -> Complex {
            return 5.0 + 4.0 * std::cos(x) * std::exp(-t) +
                   std::cos(2.0 * x) * std::exp(-4.0 * t);
        };
    else if (bc == "DN")
        p.exact = [](int, double t, double x) -> Complex {
            return 4.0 * std::sin(x / 2.0) * std::exp(-t / 4.0) +
                   std::sin(1.5 * x) * std::exp(-2.25 * t);
        };
    else if (bc == "ND")
        p.exact = [](int, double t, double x) -> Complex {
            return 4.0 * std::cos(x / 2.0) * std::exp(-t / 4.0) +
                   std::cos(1.5 * x) * std::exp(-2.25 * t);
        };
    else
        throw std::invalid_argument("heat_nonperiodic: bc must be DD, NN, DN or ND");
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    p.boundary = BoundarySpec::uniform(
        1, make_pair(kind_from_char(bc[0]), kind_from_char(bc[1])));
    return p;
}

/// NLSE soliton shifted so the Dirichlet value vanishes at the truncation
/// points: da/dt = i/2 a_xx + i(a+a0)|a+a0|^2 - i(a+a0)/2 with a0 = sech(x_m)
/// has the stationary solution a = sech(x) - a0 on [-x_m, x_m].
inline Problem nlse_shifted_soliton(const std::string& bc, int n_points = 101,
                                    int n_steps = 628) {
    if (bc != "DD" && bc != "DN" && bc != "ND")
        throw std::invalid_argument("nlse_shifted_soliton: bc must be DD, DN or ND");
    Problem p;
    const double xm = 5.0;
    const double a0 = sech(xm);
    p.id = "nlse-shifted-" + bc;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(0.0, 2.0 * kPi, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, kI / 2.0);
    p.g = [a0](double, double, std::span<const Complex> u, std::span<const Complex>,
               std::span<Complex> out) {
        const Complex full = u[0] + a0;
        out[0] = kI * full * std::norm(full) - kI * full / 2.0;
    };
    p.exact = [a0](int, double, double x) -> Complex { return sech(x) - a0; };
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    auto value = [a0](double, double x) -> Complex { return sech(x) - a0; };
    auto slope = [](double, double x) -> Complex {
        return -sech(x) * std::tanh(x);
    };
    p.boundary = BoundarySpec::uniform(
        1, pair_from_exact(kind_from_char(bc[0]), kind_from_char(bc[1]), -xm, xm,
                           value, slope));
    return p;
}

/// NLSE soliton with time-dependent boundary values on [-2, 2], t in [0, 2pi]:
/// da/dt = i/2 a_xx + i a|a|^2, exact a = sech(x) e^{it/2}; observable Re(a).
inline Problem nlse_soliton_td_boundary(const std::string& bc, int n_points = 41,
                                        int n_steps = 2000) {
    Problem p;
    const double xm = 2.0;
    p.id = "nlse-soliton-" + bc;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(0.0, 2.0 * kPi, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, kI / 2.0);
    p.g = [](double, double, std::span<const Complex> u, std::span<const Complex>,
             std::span<Complex> out) { out[0] = kI * u[0] * std::norm(u[0]); };
    p.exact = [](int, double t, double x) -> Complex {
        return sech(x) * std::exp(kI * t / 2.0);
    };
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    auto value = [exact = p.exact](double t, double x) { return exact(0, t, x); };
    auto slope = [](double t, double x) -> Complex {
        return -sech(x) * std::tanh(x) * std::exp(kI * t / 2.0);
    };
    p.boundary = BoundarySpec::uniform(
        1, pair_from_exact(kind_from_char(bc[0]), kind_from_char(bc[1]), -xm, xm,
                           value, slope));
    p.observable = [](int, Complex v) -> Complex { return v.real(); };
    return p;
}

/// Peregrine solution of the NLSE on [-2, 2], t in [-5, 5]:
/// Per(t,x) = e^{it}(4(1+2it)/(1+4(t^2+x^2)) - 1); observable |a|^2, max 9.
inline Problem peregrine(const std::string& bc, int n_points = 21, int n_steps = 2000) {
    Problem p;
    const double xm = 2.0;
    p.id = "peregrine-" + bc;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(-5.0, 5.0, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, kI / 2.0);
    p.g = [](double, double, std::span<const Complex> u, std::span<const Complex>,
             std::span<Complex> out) { out[0] = kI * u[0] * std::norm(u[0]); };
    p.exact = [](int, double t, double x) -> Complex {
        const double den = 1.0 + 4.0 * (t * t + x * x);
        return std::exp(kI * t) * (4.0 * (1.0 + 2.0 * kI * t) / den - 1.0);
    };
    p.init = [exact = p.exact](int c, double x) { return exact(c, -5.0, x); };
    auto value = [exact = p.exact](double t, double x) { return exact(0, t, x); };
    auto slope = [](double t, double x) -> Complex {
        const double den = 1.0 + 4.0 * (t * t + x * x);
        return std::exp(kI * t) * 4.0 * (1.0 + 2.0 * kI * t) * (-8.0 * x) / (den * den);
    };
    p.boundary = BoundarySpec::uniform(
        1, pair_from_exact(kind_from_char(bc[0]), kind_from_char(bc[1]), -xm, xm,
                           value, slope));
    p.observable = [](int, Complex v) -> Complex { return std::norm(v); };
    p.error_normalization = 9.0;
    return p;
}

/// Pulsating two-soliton bound state on [-2, 2], t in [0, pi]:
/// da/dt = -i(a|a|^2 + a_xx/2), initial 2 sech(x); observable |a|.
inline Problem breather(const std::string& bc, int n_points = 21, int n_steps = 2000) {
    Problem p;
    const double xm = 2.0;
    p.id = "breather-" + bc;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(0.0, kPi, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, -kI / 2.0);
    p.g = [](double, double, std::span<const Complex> u, std::span<const Complex>,
             std::span<Complex> out) { out[0] = -kI * u[0] * std::norm(u[0]); };
    p.exact = [](int, double t, double x) -> Complex {
        const Complex e4 = std::exp(-4.0 * kI * t);
        const double den =
            std::cosh(4.0 * x) + 4.0 * std::cosh(2.0 * x) + 3.0 * std::cos(4.0 * t);
        return 4.0 * std::exp(-kI * t / 2.0) *
               (std::cosh(3.0 * x) + 3.0 * e4 * std::cosh(x)) / den;
    };
    p.init = [](int, double x) -> Complex { return 2.0 * sech(x); };
    auto value = [exact = p.exact](double t, double x) { return exact(0, t, x); };
    auto slope = [](double t, double x) -> Complex {
        const Complex e4 = std::exp(-4.0 * kI * t);
        const double den =
            std::cosh(4.0 * x) + 4.0 * std::cosh(2.0 * x) + 3.0 * std::cos(4.0 * t);
        const Complex num = std::cosh(3.0 * x) + 3.0 * e4 * std::cosh(x);
        const Complex dnum = 3.0 * std::sinh(3.0 * x) + 3.0 * e4 * std::sinh(x);
        const double dden = 4.0 * std::sinh(4.0 * x) + 8.0 * std::sinh(2.0 * x);
        return 4.0 * std::exp(-kI * t / 2.0) * (dnum / den - num * dden / (den * den));
    };
    p.boundary = BoundarySpec::uniform(
        1, pair_from_exact(kind_from_char(bc[0]), kind_from_char(bc[1]), -xm, xm,
                           value, slope));
    p.observable = [](int, Complex v) -> Complex { return std::abs(v); };
    return p;
}

namespace detail {

inline Complex simulton_profile(double x) { return 1.5 * sech(x / 2.0) * sech(x / 2.0); }
inline Complex simulton_slope(double x) {
    return -1.5 * sech(x / 2.0) * sech(x / 2.0) * std::tanh(x / 2.0);
}

inline BoundaryPair simulton_pair(const std::string& bc, double xm, double omega) {
    auto value = [omega](double t, double x) -> Complex {
        return simulton_profile(x) * std::exp(-kI * omega * t);
    };
    auto slope = [omega](double t, double x) -> Complex {
        return simulton_slope(x) * std::exp(-kI * omega * t);
    };
    return pair_from_exact(kind_from_char(bc[0]), kind_from_char(bc[1]), -xm, xm,
                           value, slope);
}

} // namespace detail

/// Two coupled parametric-waveguide fields on [-3, 3], t in [0, pi]:
/// da/dt = -i(a_xx + a* b), db/dt = -i(b_xx + a^2 + b);
/// exact [a,b] = (3/2)sech^2(x/2) [e^{-it}, e^{-2it}]; observables Re.
inline Problem double_simulton(const std::string& bc_a, const std::string& bc_b,
                               int n_points = 21, int n_steps = 2000) {
    Problem p;
    const double xm = 3.0;
    p.id = "double-simulton-" + bc_a + "-" + bc_b;
    p.components = 2;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(0.0, kPi, n_steps);
    p.coeffs = LinearCoefficients::uniform(2, -kI);
    p.g = [](double, double, std::span<const Complex> u, std::span<const Complex>,
             std::span<Complex> out) {
        out[0] = -kI * std::conj(u[0]) * u[1];
        out[1] = -kI * (u[0] * u[0] + u[1]);
    };
    p.exact = [](int c, double t, double x) -> Complex {
        return detail::simulton_profile(x) * std::exp(-kI * (c == 0 ? 1.0 : 2.0) * t);
    };
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    p.boundary.pairs = {{detail::simulton_pair(bc_a, xm, 1.0)},
                        {detail::simulton_pair(bc_b, xm, 2.0)}};
    p.observable = [](int, Complex v) -> Complex { return v.real(); };
    p.error_normalization = 1.5;
    return p;
}

/// Three coupled fields on [-3, 3], t in [0, pi]:
/// da/dt = -i(a_xx + a* c), db/dt = -i(b_xx + b* c), dc/dt = -i(c_xx + ab + c);
/// exact (3/2)sech^2(x/2) [e^{-it}, e^{-it}, e^{-2it}]; BCs DD, ND, NN.
inline Problem triple_simulton(int n_points = 21, int n_steps = 2000) {
    Problem p;
    const double xm = 3.0;
    p.id = "triple-simulton";
    p.components = 3;
    p.grid = Grid(-xm, xm, n_points);
    p.time = TimeGrid(0.0, kPi, n_steps);
    p.coeffs = LinearCoefficients::uniform(3, -kI);
    p.g = [](double, double, std::span<const Complex> u, std::span<const Complex>,
             std::span<Complex> out) {
        out[0] = -kI * std::conj(u[0]) * u[2];
        out[1] = -kI * std::conj(u[1]) * u[2];
        out[2] = -kI * (u[0] * u[1] + u[2]);
    };
    p.exact = [](int c, double t, double x) -> Complex {
        return detail::simulton_profile(x) * std::exp(-kI * (c == 2 ? 2.0 : 1.0) * t);
    };
    p.init = [exact = p.exact](int c, double x) { return exact(c, 0.0, x); };
    p.boundary.pairs = {{detail::simulton_pair("DD", xm, 1.0)},
                        {detail::simulton_pair("ND", xm, 1.0)},
                        {detail::simulton_pair("NN", xm, 2.0)}};
    p.observable = [](int, Complex v) -> Complex { return v.real(); };
    p.error_normalization = 1.5;
    return p;
}

/// Stochastic heat equation da/dt = a_xx/2 + eta on [0, 5], t in [0, 1],
/// zero Dirichlet boundaries and zero initial condition; eta is
/// delta-correlated unit noise. Observable J(t) = integral of <|a|^2>.
inline Problem stochastic_heat(int n_points = 101, int n_steps = 1000) {
    Problem p;
    p.id = "stochastic-heat";
    p.grid = Grid(0.0, 5.0, n_points);
    p.time = TimeGrid(0.0, 1.0, n_steps);
    p.coeffs = LinearCoefficients::uniform(1, 0.5);
    p.boundary = BoundarySpec::uniform(
        1, make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet));
    p.init = [](int, double) { return Complex{}; };
    p.noise_amplitude = 1.0;
    return p;
}

/// Analytic J(t) for the stochastic heat equation: sum over sine modes of
/// L^2/(n^2 pi^2) (1 - e^{-n^2 pi^2 t / L^2}). The flat part sums in closed
/// form (sum 1/n^2 = pi^2/6), leaving a fast-converging exponential tail.
/// `max_modes` truncates the sum (the lattice resolves only N_T modes).
inline double stochastic_heat_j(double t, double length = 5.0, int max_modes = -1) {
    const double l2 = length * length;
    double j = 0.0;
    if (t <= 0.0)
        return 0.0;
    if (max_modes < 0) {
        j = l2 / 6.0;
        for (int n = 1;; ++n) {
            const double rate = double(n) * n * kPi * kPi / l2;
            const double term = std::exp(-rate * t) / rate;
            j -= term;
            if (term < 1e-14 && n > 4)
                break;
            if (n > 2000000)
                break;
        }
    } else {
        for (int n = 1; n <= max_modes; ++n) {
            const double rate = double(n) * n * kPi * kPi / l2;
            j += (1.0 - std::exp(-rate * t)) / rate;
        }
    }
    return j;
}

/// Catalog lookup by name. Zero point/step counts select each problem's
/// default discretization. `bc` holds one two-letter pair per component,
/// separated by ';' for the multi-component problems.
inline Problem by_name(const std::string& id, std::string bc = "", int n_points = 0,
                       int n_steps = 0) {
    const auto pick = [](int v, int dflt) { return v > 0 ? v : dflt; };
    if (id == "heat-zero")
        return heat_zero_boundary(bc.empty() ? "DD" : bc, pick(n_points, 21),
                                  pick(n_steps, 2000));
    if (id == "heat")
        return heat_nonperiodic(bc.empty() ? "DD" : bc, pick(n_points, 51),
                                pick(n_steps, 40));
    if (id == "nlse-shifted")
        return nlse_shifted_soliton(bc.empty() ? "DD" : bc, pick(n_points, 101),
                                    pick(n_steps, 628));
    if (id == "nlse-soliton")
        return nlse_soliton_td_boundary(bc.empty() ? "DD" : bc, pick(n_points, 41),
                                        pick(n_steps, 2000));
    if (id == "peregrine")
        return peregrine(bc.empty() ? "DD" : bc, pick(n_points, 21), pick(n_steps, 2000));
    if (id == "breather")
        return breather(bc.empty() ? "DD" : bc, pick(n_points, 21), pick(n_steps, 2000));
    if (id == "double-simulton") {
        if (bc.empty())
            bc = "DD;NN";
        const auto sep = bc.find(';');
        if (sep == std::string::npos)
            throw std::invalid_argument("double-simulton: bc needs two pairs, e.g. DD;NN");
        return double_simulton(bc.substr(0, sep), bc.substr(sep + 1),
                               pick(n_points, 21), pick(n_steps, 2000));
    }
    if (id == "triple-simulton")
        return triple_simulton(pick(n_points, 21), pick(n_steps, 2000));
    if (id == "stochastic-heat")
        return stochastic_heat(pick(n_points, 101), pick(n_steps, 1000));
    throw std::invalid_argument("unknown problem id: " + id);
}

/// Expected J after `steps` midpoint/propagator steps of size dt on a lattice
/// resolving n_modes sine modes. Each mode obeys the exact recursion
/// u' = rho u + dt*sqrt(rho) w with rho = e^{-k^2 dt}, so its variance after
/// j steps is dt e^{-k^2 dt/2} (1 - rho^j)/(1 - rho); the continuum limit
/// recovers (1 - e^{-k^2 t})/k^2 and summing over modes gives the analytic
/// series.
inline double stochastic_heat_j_discrete(int steps, double dt, double length,
                                         int n_modes) {
    double j = 0.0;
    for (int n = 1; n <= n_modes; ++n) {
        const double k2 = double(n) * n * kPi * kPi / (length * length);
        const double rho = std::exp(-k2 * dt);
        const double gain = dt * std::exp(-k2 * dt / 2.0);
        j += gain * (1.0 - std::pow(rho, steps)) / (1.0 - rho);
    }
    return j;
}

} // namespace trigpde::problems

#endif
