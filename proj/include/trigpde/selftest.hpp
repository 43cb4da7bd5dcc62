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

#ifndef TRIGPDE_SELFTEST_HPP
#define TRIGPDE_SELFTEST_HPP

#include <chrono>
#include <random>
#include <sstream>

#include "trigpde/bench.hpp"

namespace trigpde::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

namespace detail {

inline std::vector<Complex> random_vector(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& x : v)
        x = Complex{dist(rng), dist(rng)};
    return v;
}

inline std::vector<Complex> naive_transform(TransformKind kind,
                                            const std::vector<Complex>& x) {
    const double pi = std::numbers::pi;
    const int m = static_cast<int>(x.size());
    std::vector<Complex> y(m, Complex{});
    switch (kind) {
        case TransformKind::Fft:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += x[j] * std::exp(Complex{0.0, -2.0 * pi * j * n / m});
            break;
        case TransformKind::Dst1:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::sin(pi * (j + 1) * (n + 1) / (m + 1));
            break;
        case TransformKind::Dct1:
            for (int n = 0; n < m; ++n) {
                y[n] = x[0] + (n % 2 == 0 ? 1.0 : -1.0) * x[m - 1];
                for (int j = 1; j <= m - 2; ++j)
                    y[n] += 2.0 * x[j] * std::cos(pi * j * n / (m - 1));
            }
            break;
        case TransformKind::Dst2:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::sin(pi * (j + 0.5) * (n + 1) / m);
            break;
        case TransformKind::Dst3:
            for (int n = 0; n < m; ++n) {
                y[n] = (n % 2 == 0 ? 1.0 : -1.0) * x[m - 1];
                for (int j = 0; j <= m - 2; ++j)
                    y[n] += 2.0 * x[j] * std::sin(pi * (j + 1) * (n + 0.5) / m);
            }
            break;
        case TransformKind::Dct2:
            for (int n = 0; n < m; ++n)
                for (int j = 0; j < m; ++j)
                    y[n] += 2.0 * x[j] * std::cos(pi * (j + 0.5) * n / m);
            break;
        case TransformKind::Dct3:
            for (int n = 0; n < m; ++n) {
                y[n] = x[0];
                for (int j = 1; j <= m - 1; ++j)
                    y[n] += 2.0 * x[j] * std::cos(pi * j * (n + 0.5) / m);
            }
            break;
    }
    return y;
}

inline int points_for(TransformKind kind, int n_transform) {
    switch (kind) {
        case TransformKind::Fft: return n_transform;
        case TransformKind::Dst1: return n_transform + 2;
        case TransformKind::Dct1: return n_transform;
        default: return n_transform + 1;
    }
}

template <typename Fn>
CheckResult timed(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        r.passed = fn(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Solve A x = b for small dense systems by Gaussian elimination with
/// partial pivoting. A is row-major n x n; b holds n right-hand sides of
/// length n (column-major result of A^{-1} B).
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b,
                                       int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col]))
                pivot = r;
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a[pivot * n + c], a[col * n + c]);
                std::swap(b[pivot * n + c], b[col * n + c]);
            }
        const double diag = a[col * n + col];
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double factor = a[r * n + col] / diag;
            for (int c = 0; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
                b[r * n + c] -= factor * b[col * n + c];
            }
        }
        for (int c = 0; c < n; ++c)
            b[col * n + c] /= diag;
        for (int c = 0; c < n; ++c)
            a[col * n + c] = (c == col) ? 1.0 : a[col * n + c] / diag;
    }
    return b;
}

} // namespace detail

/// FFT-embedded transforms vs naive definitional sums, plus round-trips.
/// `inject_fault` deliberately mismatches one plan to prove the check bites.
inline CheckResult check_transform_oracles(bool inject_fault = false) {
    return detail::timed("transform-oracles", [inject_fault](std::ostringstream& msg) {
        const TransformKind kinds[] = {TransformKind::Fft,  TransformKind::Dst1,
                                       TransformKind::Dct1, TransformKind::Dst2,
                                       TransformKind::Dst3, TransformKind::Dct2,
                                       TransformKind::Dct3};
        double worst_fwd = 0.0, worst_rt = 0.0;
        for (TransformKind kind : kinds)
            for (int nt = 4; nt <= 64; nt += 3) {
                auto plan = TransformPlan::create(kind, detail::points_for(kind, nt));
                if (inject_fault && kind == TransformKind::Dst1 && nt == 16)
                    plan.n_logical += 2;
                auto x = detail::random_vector(nt, 7000u + nt);
                std::vector<Complex> y(nt), back(nt);
                forward(plan, x, y);
                auto expect = detail::naive_transform(kind, x);
                const double scale = max_abs(expect);
                for (int n = 0; n < nt; ++n)
                    worst_fwd = std::max(worst_fwd, std::abs(y[n] - expect[n]) / scale);
                inverse(plan, y, back);
                const double xscale = max_abs(x);
                for (int j = 0; j < nt; ++j)
                    worst_rt = std::max(worst_rt, std::abs(back[j] - x[j]) / xscale);
            }
        msg << "max forward residual " << worst_fwd << ", max round-trip residual "
            << worst_rt;
        return worst_fwd < 1e-12 && worst_rt < 1e-13;
    });
}

/// Diagonality of the half-mode spectral derivative matrix on the shifted
/// lattice x_m = (m - 1/2) dx: D_ln = (2 k_n^2 / N) sum_m sin(k_n x_m)
/// sin(k_l x_m) must be diag(k_n^2).
inline CheckResult check_derivative_diagonality() {
    return detail::timed("derivative-diagonality", [](std::ostringstream& msg) {
        const int n = 24;
        const double length = 1.7;
        const double dx = length / n;
        const double pi = std::numbers::pi;
        std::vector<double> k(n);
        for (int i = 0; i < n; ++i)
            k[i] = (i + 0.5) * pi / length;
        const double k_max2 = k[n - 1] * k[n - 1];
        double worst_off = 0.0, worst_diag = 0.0;
        for (int l = 0; l < n; ++l)
            for (int nn = 0; nn < n; ++nn) {
                double sum = 0.0;
                for (int m = 1; m <= n; ++m) {
                    const double x = (m - 0.5) * dx;
                    sum += std::sin(k[nn] * x) * std::sin(k[l] * x);
                }
                const double d = 2.0 * k[nn] * k[nn] / n * sum;
                if (l == nn)
                    worst_diag = std::max(worst_diag,
                                          std::abs(d - k[nn] * k[nn]) / (k[nn] * k[nn]));
                else
                    worst_off = std::max(worst_off, std::abs(d) / k_max2);
            }
        msg << "max off-diagonal " << worst_off << " (rel k_max^2), max diagonal "
            << "deviation " << worst_diag;
        return worst_off < 1e-10 && worst_diag < 1e-12;
    });
}

/// Quadrature version of the same statement: with mass matrix
/// A_ij = int sin(k_j x) sin(k_i x) dx and stiffness B_ij = k_i k_j
/// int cos(k_j x) cos(k_i x) dx over [0,1], A^{-1} B = diag(k_i^2).
inline CheckResult check_quadrature_equivalence() {
    return detail::timed("quadrature-equivalence", [](std::ostringstream& msg) {
        const int n = 8;
        const int panels = 4000; // composite Simpson
        const double pi = std::numbers::pi;
        std::vector<double> k(n);
        for (int i = 0; i < n; ++i)
            k[i] = (i + 0.5) * pi;
        auto integrate = [&](auto&& f) {
            const double h = 1.0 / panels;
            double sum = f(0.0) + f(1.0);
            for (int j = 1; j < panels; ++j)
                sum += (j % 2 ? 4.0 : 2.0) * f(j * h);
            return sum * h / 3.0;
        };
        std::vector<double> a(n * n), b(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i * n + j] = integrate(
                    [&](double x) { return std::sin(k[j] * x) * std::sin(k[i] * x); });
                b[i * n + j] = k[i] * k[j] *
                               integrate([&](double x) {
                                   return std::cos(k[j] * x) * std::cos(k[i] * x);
                               });
            }
        auto d = detail::solve_dense(a, b, n);
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double expect = (i == j) ? k[i] * k[i] : 0.0;
                worst = std::max(worst, std::abs(d[i * n + j] - expect) /
                                            (k[n - 1] * k[n - 1]));
            }
        msg << "max deviation " << worst << " (rel k_max^2)";
        return worst < 1e-8;
    });
}

/// Patched fields satisfy homogeneous boundary conditions: Dirichlet ends
/// vanish, Neumann ends have zero one-sided-stencil derivative.
inline CheckResult check_patch_invariants() {
    return detail::timed("patch-invariants", [](std::ostringstream& msg) {
        const Grid grid(-1.0, 2.0, 31);
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        const char* pairs[] = {"DD", "NN", "DN", "ND"};
        double worst_value = 0.0, worst_slope = 0.0;
        for (const char* bc : pairs) {
            // quadratic test field: boundary data known in closed form
            const Complex c0{dist(rng), dist(rng)}, c1{dist(rng), dist(rng)},
                c2{dist(rng), dist(rng)};
            auto u_of = [&](double x) { return c0 + c1 * x + c2 * x * x; };
            auto du_of = [&](double x) { return c1 + 2.0 * c2 * x; };
            const BoundaryKind ka = bc[0] == 'D' ? BoundaryKind::Dirichlet
                                                 : BoundaryKind::Neumann;
            const BoundaryKind kb = bc[1] == 'D' ? BoundaryKind::Dirichlet
                                                 : BoundaryKind::Neumann;
            BoundaryPair pair = make_pair(
                ka, kb,
                [&, ka](double) {
                    return ka == BoundaryKind::Dirichlet ? u_of(grid.x_a)
                                                         : du_of(grid.x_a);
                },
                [&, kb](double) {
                    return kb == BoundaryKind::Dirichlet ? u_of(grid.x_b)
                                                         : du_of(grid.x_b);
                });
            Patch p = make_patch(pair, 0.0, grid.x_a, grid.x_b, Complex{1.0, 0.0});
            std::vector<Complex> v(grid.n);
            for (int j = 0; j < grid.n; ++j)
                v[j] = u_of(grid.point(j));
            subtract_patch(v, p, 0.0, grid);
            const double scale = 1.0 + std::abs(c0) + std::abs(c1) + std::abs(c2);
            const double h = grid.dx();
            auto end_checks = [&](BoundaryKind kind, bool low) {
                if (kind == BoundaryKind::Dirichlet) {
                    const Complex val = low ? v.front() : v.back();
                    worst_value = std::max(worst_value, std::abs(val) / scale);
                } else {
                    const Complex d =
                        low ? (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
                            : (3.0 * v[grid.n - 1] - 4.0 * v[grid.n - 2] +
                               v[grid.n - 3]) /
                                  (2.0 * h);
                    worst_slope = std::max(worst_slope, std::abs(d) / scale);
                }
            };
            end_checks(ka, true);
            end_checks(kb, false);
        }
        msg << "max scaled end value " << worst_value << ", end slope " << worst_slope;
        return worst_value < 1e-12 && worst_slope < 1e-8;
    });
}

/// The finite-difference Laplacian converges at second order on eigenmodes.
inline CheckResult check_fd_convergence() {
    return detail::timed("fd-convergence", [](std::ostringstream& msg) {
        std::vector<double> log_h, log_e;
        BoundaryPair dd = make_pair(BoundaryKind::Dirichlet, BoundaryKind::Dirichlet);
        for (int n : {11, 21, 41, 81, 161}) {
            Grid grid(0.0, std::numbers::pi, n);
            std::vector<Complex> u(n), lap(n);
            for (int j = 0; j < n; ++j)
                u[j] = std::sin(grid.point(j));
            fd_laplacian(u, grid, dd, 0.0, lap);
            double err = 0.0;
            for (int j = 1; j < n - 1; ++j)
                err = std::max(err, std::abs(lap[j] + std::sin(grid.point(j))));
            log_h.push_back(std::log(grid.dx()));
            log_e.push_back(std::log(err));
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
        msg << "log-log slope " << slope;
        return std::abs(slope - 2.0) < 0.1;
    });
}

/// Exact solutions satisfy their own PDEs: central finite differences in
/// x and t of the catalog's exact fields against g + D2 u_xx.
inline CheckResult check_exact_solution_residuals() {
    return detail::timed("exact-solution-residuals", [](std::ostringstream& msg) {
        const struct {
            std::string id;
            std::string bc;
        } entries[] = {{"heat-zero", "DD"},    {"heat-zero", "NN"}, {"heat", "DD"},
                       {"heat", "NN"},         {"heat", "DN"},      {"heat", "ND"},
                       {"nlse-shifted", "DD"}, {"nlse-soliton", "DD"},
                       {"peregrine", "DD"},    {"breather", "DD"},
                       {"double-simulton", "DD;NN"}, {"triple-simulton", ""}};
        const double hx = 1e-3, ht = 1e-4;
        double worst = 0.0;
        for (const auto& e : entries) {
            Problem pb = problems::by_name(e.id, e.bc);
            const double t0 = pb.time.t0 + 0.3 * (pb.time.t1 - pb.time.t0);
            const int nc = pb.components;
            std::vector<Complex> u(nc), du(nc), g(nc, Complex{});
            double scale = 0.0;
            for (int c = 0; c < nc; ++c)
                scale = std::max(scale, std::abs(pb.exact(c, t0, 0.5 * (pb.grid.x_a +
                                                                        pb.grid.x_b))));
            for (int probe = 1; probe <= 3; ++probe) {
                const double x =
                    pb.grid.x_a + probe * (pb.grid.x_b - pb.grid.x_a) / 4.0;
                for (int c = 0; c < nc; ++c) {
                    u[c] = pb.exact(c, t0, x);
                    du[c] = (pb.exact(c, t0, x + hx) - pb.exact(c, t0, x - hx)) /
                            (2.0 * hx);
                }
                if (pb.g)
                    pb.g(t0, x, u, du, g);
                for (int c = 0; c < nc; ++c) {
                    const Complex ut =
                        (pb.exact(c, t0 + ht, x) - pb.exact(c, t0 - ht, x)) /
                        (2.0 * ht);
                    const Complex uxx = (pb.exact(c, t0, x + hx) - 2.0 * u[c] +
                                         pb.exact(c, t0, x - hx)) /
                                        (hx * hx);
                    const Complex residual = ut - g[c] - pb.coeffs.at(c) * uxx;
                    worst = std::max(worst, std::abs(residual) / scale);
                }
            }
        }
        msg << "max scaled residual " << worst;
        return worst < 1e-4;
    });
}

inline std::vector<CheckResult> run_all(bool inject_fault = false) {
    return {check_transform_oracles(inject_fault), check_derivative_diagonality(),
            check_quadrature_equivalence(),        check_patch_invariants(),
            check_fd_convergence(),                check_exact_solution_residuals()};
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace trigpde::selftest

#endif
