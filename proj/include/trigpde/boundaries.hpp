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

#ifndef TRIGPDE_BOUNDARIES_HPP
#define TRIGPDE_BOUNDARIES_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigpde/grid.hpp"

namespace trigpde {

enum class BoundaryKind { Periodic, Dirichlet, Neumann };

inline char to_char(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::Periodic: return 'P';
        case BoundaryKind::Dirichlet: return 'D';
        case BoundaryKind::Neumann: return 'N';
    }
    return '?';
}

/// Value function of time: the Dirichlet value or Neumann derivative at one end.
using BoundaryValueFn = std::function<Complex(double t)>;

inline BoundaryValueFn zero_boundary() {
    return [](double) { return Complex{}; };
}

/// Boundary condition of one field component along one dimension.
struct BoundaryPair {
    BoundaryKind kind_a = BoundaryKind::Dirichlet;
    BoundaryKind kind_b = BoundaryKind::Dirichlet;
    BoundaryValueFn value_a = zero_boundary();
    BoundaryValueFn value_b = zero_boundary();

    bool periodic() const { return kind_a == BoundaryKind::Periodic; }
};

inline BoundaryPair make_pair(BoundaryKind a, BoundaryKind b,
                              BoundaryValueFn va = zero_boundary(),
                              BoundaryValueFn vb = zero_boundary()) {
    if ((a == BoundaryKind::Periodic) != (b == BoundaryKind::Periodic))
        throw std::invalid_argument(
            "BoundaryPair: periodic at one end requires periodic at the other");
    return BoundaryPair{a, b, std::move(va), std::move(vb)};
}

/// Transform family matching a boundary pair: the basis must satisfy the
/// homogeneous condition at each end.
inline TransformKind transform_kind(BoundaryKind a, BoundaryKind b) {
    using BK = BoundaryKind;
    if (a == BK::Periodic && b == BK::Periodic) return TransformKind::Fft;
    if (a == BK::Dirichlet && b == BK::Dirichlet) return TransformKind::Dst1;
    if (a == BK::Neumann && b == BK::Neumann) return TransformKind::Dct1;
    if (a == BK::Dirichlet && b == BK::Neumann) return TransformKind::Dst3;
    if (a == BK::Neumann && b == BK::Dirichlet) return TransformKind::Dct3;
    throw std::invalid_argument("transform_kind: unsupported boundary pair");
}

/// First grid index that enters the transform. Dirichlet points at the low
/// end are pinned and excluded; transformed points are contiguous from here.
inline int transform_start(TransformKind kind) {
    switch (kind) {
        case TransformKind::Dst1: return 1;
        case TransformKind::Dst3: return 1;
        default: return 0;
    }
}

/// Per-component, per-dimension boundary specification.
struct BoundarySpec {
    // pairs[component][dimension]
    std::vector<std::vector<BoundaryPair>> pairs;

    const BoundaryPair& at(int component, int dim = 0) const {
        return pairs.at(component).at(dim);
    }

    static BoundarySpec uniform(int components, BoundaryPair pair) {
        BoundarySpec s;
        s.pairs.assign(components, {pair});
        return s;
    }
};

/// Low-order polynomial carrying the inhomogeneous boundary values, so the
/// remainder satisfies homogeneous conditions. Laplacian-free except in the
/// N-N case, whose quadratic term induces the linear-in-time drift eps.
struct Patch {
    BoundaryKind kind_a = BoundaryKind::Dirichlet;
    BoundaryKind kind_b = BoundaryKind::Dirichlet;
    Complex u_a{}, u_b{}; // Dirichlet values
    Complex n_a{}, n_b{}; // Neumann derivative values
    Complex eps{};        // N-N drift rate
    double t_ref = 0.0;
    double x_a = 0.0, x_b = 1.0;

    Complex evaluate(double t, double x) const {
        const double xa = x - x_a;
        switch (pair_code()) {
            case Code::DD: return u_a + xa * (u_b - u_a) / (x_b - x_a);
            case Code::NN:
                return eps * (t - t_ref) + n_a * xa +
                       0.5 * xa * xa * (n_b - n_a) / (x_b - x_a);
            case Code::DN: return u_a + xa * n_b;
            case Code::ND: return u_b + (x - x_b) * n_a;
        }
        return {};
    }

    /// Spatial second derivative (constant; nonzero only for N-N).
    Complex second_derivative() const {
        if (pair_code() == Code::NN)
            return (n_b - n_a) / (x_b - x_a);
        return {};
    }

    /// Time derivative (constant; nonzero only for N-N with drift).
    Complex time_derivative() const {
        if (pair_code() == Code::NN)
            return eps;
        return {};
    }

  private:
    enum class Code { DD, NN, DN, ND };
    Code pair_code() const {
        using BK = BoundaryKind;
        if (kind_a == BK::Dirichlet)
            return kind_b == BK::Dirichlet ? Code::DD : Code::DN;
        return kind_b == BK::Dirichlet ? Code::ND : Code::NN;
    }
};

/// Build the patch for one component from boundary values sampled at time t.
/// `d2` is the linear coefficient of the second derivative; it only enters
/// the N-N drift rate eps = d2*(n_b - n_a)/(x_b - x_a).
inline Patch make_patch(const BoundaryPair& pair, double t, double x_a, double x_b,
                        Complex d2) {
    if (pair.periodic())
        throw std::invalid_argument("make_patch: periodic boundaries need no patch");
    Patch p;
    p.kind_a = pair.kind_a;
    p.kind_b = pair.kind_b;
    p.t_ref = t;
    p.x_a = x_a;
    p.x_b = x_b;
    const Complex va = pair.value_a(t);
    const Complex vb = pair.value_b(t);
    if (pair.kind_a == BoundaryKind::Dirichlet)
        p.u_a = va;
    else
        p.n_a = va;
    if (pair.kind_b == BoundaryKind::Dirichlet)
        p.u_b = vb;
    else
        p.n_b = vb;
    if (pair.kind_a == BoundaryKind::Neumann && pair.kind_b == BoundaryKind::Neumann)
        p.eps = d2 * (p.n_b - p.n_a) / (x_b - x_a);
    return p;
}

inline void evaluate_patch(const Patch& p, double t, const Grid& grid,
                           std::span<Complex> out) {
    for (int j = 0; j < grid.n; ++j)
        out[j] = p.evaluate(t, grid.point(j));
}

/// u -> v = u - patch(t, x) on one field component.
inline void subtract_patch(std::span<Complex> u, const Patch& p, double t,
                           const Grid& grid) {
    for (int j = 0; j < grid.n; ++j)
        u[j] -= p.evaluate(t, grid.point(j));
}

/// v -> u = v + patch(t, x) on one field component.
inline void add_patch(std::span<Complex> v, const Patch& p, double t, const Grid& grid) {
    for (int j = 0; j < grid.n; ++j)
        v[j] += p.evaluate(t, grid.point(j));
}

} // namespace trigpde

#endif
