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

#ifndef TRIGPDE_INTEGRATOR_HPP
#define TRIGPDE_INTEGRATOR_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>

#include "trigpde/problem.hpp"

namespace trigpde {

enum class Method { FIP, FSD, FD };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::FIP: return "FIP";
        case Method::FSD: return "FSD";
        case Method::FD: return "FD";
    }
    return "?";
}

struct MethodConfig {
    Method method = Method::FIP;
    int iterations = 4;
    int ensemble_size = 1;
    std::uint64_t seed = 0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> states;
    bool diverged = false;
    int diverged_step = -1;
    double wall_seconds = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace detail

/// RNG stream for one trajectory, derived from (seed, index) so that results
/// do not depend on how trajectories are scheduled across threads.
inline std::mt19937_64 trajectory_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(detail::splitmix64(detail::splitmix64(seed) ^ index));
}

/// Independent real Gaussians of standard deviation sigma.
inline void fill_gaussian(std::mt19937_64& rng, double sigma, std::span<Complex> out) {
    std::normal_distribution<double> gauss(0.0, sigma);
    for (auto& v : out)
        v = gauss(rng);
}

/// Iterated-midpoint stepper. One instance advances one trajectory; the
/// spectral plans and propagators it holds are immutable and shareable, the
/// scratch fields are not.
class Stepper {
  public:
    Stepper(const Problem& pb, const MethodConfig& cfg)
        : pb_(pb), cfg_(cfg), spectral_(make_spectral(pb.boundary, pb.grid)) {
        if (cfg_.iterations < 1)
            throw std::invalid_argument("Stepper: iterations must be >= 1");
        if (cfg_.method == Method::FIP)
            prop_half_ = Propagator::build(pb_.coeffs, spectral_,
                                           pb_.time.dt() / 2.0);
        const std::size_t n = static_cast<std::size_t>(pb_.grid.n);
        deriv_ = Field(pb_.components, {n});
        grad_ = Field(pb_.components, {n});
        noise_ = Field(pb_.components, {n});
        lap_.resize(n);
    }

    /// Advance u from t_j to t_j + dt in place. Returns false on divergence.
    bool step(Field& u, double t_j, std::mt19937_64* rng) {
        const double dt = pb_.time.dt();
        const double t_mid = t_j + dt / 2.0;
        const double t_next = t_j + dt;

        if (pb_.noise_amplitude > 0.0)
            sample_noise(rng);

        if (cfg_.method == Method::FIP)
            propagate_half(u, t_j, t_j, t_mid);
        Field ubar0 = u;
        Field& ubar = u;
        for (int i = 0; i < cfg_.iterations; ++i) {
            derivative(ubar, t_mid);
            ubar = ubar0;
            ubar.axpy(dt / 2.0, deriv_);
            pin(ubar, t_mid);
        }
        ubar *= 2.0;
        ubar -= ubar0;
        if (cfg_.method == Method::FIP)
            propagate_half(u, t_next, t_mid, t_next);
        pin(u, t_next);
        return u.all_finite();
    }

    const std::vector<ComponentSpectral>& spectral() const { return spectral_; }

  private:
    // d[u] at the midpoint time: g plus, for FSD/FD, the Laplacian term, plus
    // the per-step noise field.
    void derivative(const Field& u, double t_mid) {
        const int n = pb_.grid.n;
        const int nc = pb_.components;

        if (pb_.g) {
            if (pb_.g_uses_gradient)
                for (int c = 0; c < nc; ++c)
                    fd_gradient(u.component(c), pb_.grid, grad_.component(c));
            std::vector<Complex> u_pt(nc), du_pt(nc), g_pt(nc);
            for (int j = 0; j < n; ++j) {
                for (int c = 0; c < nc; ++c) {
                    u_pt[c] = u.component(c)[j];
                    du_pt[c] = pb_.g_uses_gradient ? grad_.component(c)[j] : Complex{};
                }
                pb_.g(t_mid, pb_.grid.point(j), u_pt, du_pt, g_pt);
                for (int c = 0; c < nc; ++c)
                    deriv_.component(c)[j] = g_pt[c];
            }
        } else {
            for (auto c = 0; c < nc; ++c)
                for (auto& v : deriv_.component(c))
                    v = Complex{};
        }

        if (cfg_.method == Method::FSD) {
            for (int c = 0; c < nc; ++c) {
                const auto& pair = pb_.boundary.at(c);
                auto out = deriv_.component(c);
                const Complex d2 = pb_.coeffs.at(c);
                if (pair.periodic()) {
                    std::vector<Complex> v(u.component(c).begin(),
                                           u.component(c).end());
                    spectral_laplacian(v, spectral_[c], lap_);
                } else {
                    Patch p = make_patch(pair, t_mid, pb_.grid.x_a, pb_.grid.x_b, d2);
                    std::vector<Complex> v(u.component(c).begin(),
                                           u.component(c).end());
                    subtract_patch(v, p, t_mid, pb_.grid);
                    spectral_laplacian(v, spectral_[c], lap_);
                    const Complex pxx = p.second_derivative();
                    for (auto& l : lap_)
                        l += pxx;
                }
                for (int j = 0; j < n; ++j)
                    out[j] += d2 * lap_[j];
            }
        } else if (cfg_.method == Method::FD) {
            for (int c = 0; c < nc; ++c) {
                fd_laplacian(u.component(c), pb_.grid, pb_.boundary.at(c), t_mid, lap_);
                auto out = deriv_.component(c);
                const Complex d2 = pb_.coeffs.at(c);
                for (int j = 0; j < n; ++j)
                    out[j] += d2 * lap_[j];
            }
        }

        if (pb_.noise_amplitude > 0.0)
            deriv_ += noise_;
    }

    /// FIP half-step: remove the patch built from boundary values sampled at
    /// values_t, advance the homogeneous part with the exact spectral
    /// propagator, and restore the patch at the end of the half-interval
    /// (the N-N patch picks up its eps*(add_t - subtract_t) drift here).
    void propagate_half(Field& u, double values_t, double subtract_t, double add_t) {
        for (int c = 0; c < pb_.components; ++c) {
            const auto& pair = pb_.boundary.at(c);
            const auto& cs = spectral_[c];
            auto comp = u.component(c);
            const int nt = cs.plan.n_transform;
            std::vector<Complex> v(nt), modes(nt);

            if (pair.periodic()) {
                for (int j = 0; j < nt; ++j)
                    v[j] = comp[cs.start + j];
                forward(cs.plan, v, modes);
                prop_half_.apply(c, modes);
                inverse(cs.plan, modes, v);
                for (int j = 0; j < nt; ++j)
                    comp[cs.start + j] = v[j];
                continue;
            }

            Patch p = make_patch(pair, values_t, pb_.grid.x_a, pb_.grid.x_b,
                                 pb_.coeffs.at(c));
            p.t_ref = subtract_t;
            for (int j = 0; j < nt; ++j)
                v[j] = comp[cs.start + j] -
                       p.evaluate(subtract_t, pb_.grid.point(cs.start + j));
            forward(cs.plan, v, modes);
            prop_half_.apply(c, modes);
            inverse(cs.plan, modes, v);
            for (int j = 0; j < pb_.grid.n; ++j)
                comp[j] = p.evaluate(add_t, pb_.grid.point(j));
            for (int j = 0; j < nt; ++j)
                comp[cs.start + j] += v[j];
        }
    }

    /// Overwrite Dirichlet lattice ends with their specified values.
    void pin(Field& u, double t) {
        for (int c = 0; c < pb_.components; ++c) {
            const auto& pair = pb_.boundary.at(c);
            if (pair.periodic())
                continue;
            auto comp = u.component(c);
            if (pair.kind_a == BoundaryKind::Dirichlet)
                comp[0] = pair.value_a(t);
            if (pair.kind_b == BoundaryKind::Dirichlet)
                comp[pb_.grid.n - 1] = pair.value_b(t);
        }
    }

    /// Fresh delta-correlated noise for one step, drawn on the transformed
    /// (non-pinned) points only: std = amplitude / sqrt(dt*dx).
    void sample_noise(std::mt19937_64* rng) {
        if (!rng)
            throw std::invalid_argument("Stepper: stochastic problem needs an RNG");
        const double sigma =
            pb_.noise_amplitude / std::sqrt(pb_.time.dt() * pb_.grid.dx());
        for (int c = 0; c < pb_.components; ++c) {
            auto comp = noise_.component(c);
            for (auto& v : comp)
                v = Complex{};
            const auto& cs = spectral_[c];
            fill_gaussian(*rng, sigma,
                          comp.subspan(cs.start, cs.plan.n_transform));
        }
    }

    Problem pb_;
    MethodConfig cfg_;
    std::vector<ComponentSpectral> spectral_;
    Propagator prop_half_;
    Field deriv_, grad_, noise_;
    std::vector<Complex> lap_;
};

/// Integrate one trajectory over the problem's time grid. States are stored
/// per step when `store` is set; `on_sample` fires for every stored time
/// including t0.
inline Trajectory
run(const Problem& pb, const MethodConfig& cfg, std::uint64_t trajectory_index = 0,
    const std::function<void(int step, double t, const Field&)>& on_sample = {},
    bool store = true) {
    Stepper stepper(pb, cfg);
    std::mt19937_64 rng = trajectory_rng(cfg.seed, trajectory_index);

    Trajectory traj;
    Field u = pb.initial_field();
    const double scale0 = std::max(1.0, u.max_abs());

    const auto record = [&](int step, double t, const Field& state) {
        traj.times.push_back(t);
        if (store)
            traj.states.push_back(state);
        if (on_sample)
            on_sample(step, t, state);
    };

    const auto start = std::chrono::steady_clock::now();
    record(0, pb.time.t0, u);
    for (int j = 0; j < pb.time.n_steps; ++j) {
        const bool ok = stepper.step(u, pb.time.time(j), &rng);
        if (!ok || u.max_abs() > 1e12 * scale0) {
            traj.diverged = true;
            traj.diverged_step = j;
            break;
        }
        record(j + 1, pb.time.time(j + 1), u);
    }
    traj.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return traj;
}

/// Scalar observable of the whole field at one time (e.g. a spatial integral).
using ScalarObservableFn = std::function<double(double t, const Field&)>;

struct EnsembleSeries {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> std_error; // sample std / sqrt(ensemble size)
    double wall_seconds = 0.0;
    bool diverged = false;
};

inline int default_thread_count() {
    if (const char* env = std::getenv("TRIGPDE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    return 1;
}

/// Average a scalar observable over an ensemble of independent trajectories.
/// Each trajectory's series lands in a preassigned slot before a sequential
/// reduction, so the result is identical for any thread count.
inline EnsembleSeries run_ensemble(const Problem& pb, const MethodConfig& cfg,
                                   const ScalarObservableFn& scalar,
                                   int threads = default_thread_count()) {
    const int m = cfg.ensemble_size;
    const int n_times = pb.time.n_steps + 1;
    std::vector<std::vector<double>> values(m);
    std::vector<char> diverged(m, 0);

    const auto start = std::chrono::steady_clock::now();
    const auto worker = [&](int first, int stride) {
        for (int k = first; k < m; k += stride) {
            std::vector<double>& row = values[k];
            row.reserve(n_times);
            Trajectory t = run(
                pb, cfg, static_cast<std::uint64_t>(k),
                [&](int, double tt, const Field& u) { row.push_back(scalar(tt, u)); },
                /*store=*/false);
            diverged[k] = t.diverged ? 1 : 0;
        }
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, t, threads);
        for (auto& th : pool)
            th.join();
    }

    EnsembleSeries out;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (char d : diverged)
        out.diverged = out.diverged || d;
    if (out.diverged)
        return out;

    out.times.resize(n_times);
    for (int i = 0; i < n_times; ++i)
        out.times[i] = pb.time.time(i);
    out.mean.assign(n_times, 0.0);
    out.std_error.assign(n_times, 0.0);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < n_times; ++i)
            out.mean[i] += values[k][i];
    for (double& v : out.mean)
        v /= m;
    if (m > 1) {
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < n_times; ++i) {
                const double d = values[k][i] - out.mean[i];
                out.std_error[i] += d * d;
            }
        for (double& v : out.std_error)
            v = std::sqrt(v / (m - 1)) / std::sqrt(static_cast<double>(m));
    }
    return out;
}

} // namespace trigpde

#endif
