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

#ifndef TRIGPDE_TRANSFORMS_HPP
#define TRIGPDE_TRANSFORMS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigpde/fft.hpp"
#include "trigpde/field.hpp"

namespace trigpde {

/// Discrete trigonometric transform families.
///
/// Dst1/Dct1 operate on whole-grid-point samples with integer mode numbers
/// (zero-value and zero-slope boundaries respectively). Dst3/Dct3 analyze
/// whole-point samples into half-integer modes sin(k_{n+1/2} x) and
/// cos(k_{n+1/2} x), which vanish in value (resp. slope) at one end and in
/// slope (resp. value) at the other; Dst2/Dct2 are their synthesis partners.
enum class TransformKind { Fft, Dst1, Dct1, Dst2, Dst3, Dct2, Dct3 };

struct InvalidPlanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::Fft: return "fft";
        case TransformKind::Dst1: return "dst1";
        case TransformKind::Dct1: return "dct1";
        case TransformKind::Dst2: return "dst2";
        case TransformKind::Dst3: return "dst3";
        case TransformKind::Dct2: return "dct2";
        case TransformKind::Dct3: return "dct3";
    }
    return "?";
}

/// Bookkeeping for one transform: N physical grid points, N_T transformed
/// points and the logical FFT size N_FT fixing the inverse normalization.
struct TransformPlan {
    TransformKind kind = TransformKind::Fft;
    int n_points = 0;    // N, grid points including boundaries
    int n_transform = 0; // N_T
    int n_logical = 0;   // N_FT

    static TransformPlan create(TransformKind kind, int n_points) {
        TransformPlan p;
        p.kind = kind;
        p.n_points = n_points;
        switch (kind) {
            case TransformKind::Fft:
                if (n_points < 2)
                    throw InvalidPlanError("fft plan: need at least 2 points");
                p.n_transform = n_points;
                p.n_logical = n_points;
                break;
            case TransformKind::Dst1:
                if (n_points < 3)
                    throw InvalidPlanError("dst1 plan: need at least 3 points");
                p.n_transform = n_points - 2;
                p.n_logical = 2 * (p.n_transform + 1);
                break;
            case TransformKind::Dct1:
                if (n_points < 2)
                    throw InvalidPlanError("dct1 plan: need at least 2 points");
                p.n_transform = n_points;
                p.n_logical = 2 * (p.n_transform - 1);
                break;
            case TransformKind::Dst2:
            case TransformKind::Dst3:
            case TransformKind::Dct2:
            case TransformKind::Dct3:
                if (n_points < 2)
                    throw InvalidPlanError("dst/dct-2/3 plan: need at least 2 points");
                p.n_transform = n_points - 1;
                p.n_logical = 2 * p.n_transform;
                break;
        }
        return p;
    }
};

struct SpectralCoefficients {
    std::vector<Complex> values;
    TransformPlan plan;
};

namespace detail {

// DST-I: y_n = 2 sum_j x_j sin(2*pi*(j+1)*(n+1)/N_FT), N_FT = 2(M+1).
inline void dst1_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 2 * (m + 1);
    std::vector<Complex> z(p), zf(p);
    for (int j = 0; j < m; ++j) {
        z[j + 1] = x[j];
        z[p - 1 - j] = -x[j];
    }
    fft_forward(z, zf);
    const Complex i{0.0, 1.0};
    for (int n = 0; n < m; ++n)
        y[n] = i * zf[n + 1];
}

// DCT-I: y_n = x_0 + (-1)^n x_{M-1} + 2 sum_{j=1}^{M-2} x_j cos(2*pi*j*n/N_FT),
// N_FT = 2(M-1).
inline void dct1_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 2 * (m - 1);
    std::vector<Complex> z(p), zf(p);
    for (int j = 0; j < m; ++j)
        z[j] = x[j];
    for (int j = 1; j <= m - 2; ++j)
        z[p - j] = x[j];
    fft_forward(z, zf);
    for (int n = 0; n < m; ++n)
        y[n] = zf[n];
}

// DST-II: y_n = 2 sum_j x_j sin(pi*(j+1/2)*(n+1)/M). Samples sit on the
// odd positions of a length-4M odd extension.
inline void dst2_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 4 * m;
    std::vector<Complex> z(p), zf(p);
    for (int j = 0; j < m; ++j) {
        z[2 * j + 1] = x[j];
        z[p - (2 * j + 1)] = -x[j];
    }
    fft_forward(z, zf);
    const Complex i{0.0, 1.0};
    for (int n = 0; n < m; ++n)
        y[n] = i * zf[n + 1];
}

// DST-III: y_n = (-1)^n x_{M-1} + 2 sum_{j=0}^{M-2} x_j sin(pi*(j+1)*(n+1/2)/M).
// Whole-point samples, half-integer modes read at the odd FFT bins.
inline void dst3_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 4 * m;
    std::vector<Complex> z(p), zf(p);
    for (int j = 1; j <= m; ++j)
        z[j] = x[j - 1];
    for (int j = m + 1; j <= 2 * m - 1; ++j)
        z[j] = x[2 * m - j - 1]; // even about m
    for (int j = 1; j <= 2 * m - 1; ++j)
        z[p - j] = -z[j]; // odd about 0
    fft_forward(z, zf);
    const Complex half_i{0.0, 0.5};
    for (int n = 0; n < m; ++n)
        y[n] = half_i * zf[2 * n + 1];
}

// DCT-II: y_n = 2 sum_j x_j cos(pi*(j+1/2)*n/M).
inline void dct2_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 4 * m;
    std::vector<Complex> z(p), zf(p);
    for (int j = 0; j < m; ++j) {
        z[2 * j + 1] = x[j];
        z[p - (2 * j + 1)] = x[j];
    }
    fft_forward(z, zf);
    for (int n = 0; n < m; ++n)
        y[n] = zf[n];
}

// DCT-III: y_n = x_0 + 2 sum_{j=1}^{M-1} x_j cos(pi*j*(n+1/2)/M).
inline void dct3_kernel(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    const int p = 4 * m;
    std::vector<Complex> z(p), zf(p);
    z[0] = 2.0 * x[0];
    for (int j = 1; j <= m - 1; ++j) {
        z[j] = x[j];
        z[2 * m - j] = -x[j]; // odd about m
    }
    for (int j = 1; j <= 2 * m - 1; ++j)
        z[p - j] = z[j]; // even about 0
    fft_forward(z, zf);
    for (int n = 0; n < m; ++n)
        y[n] = 0.5 * zf[2 * n + 1];
}

inline void fft_kernel(std::span<const Complex> x, std::span<Complex> y) {
    fft_forward(x, y);
}

inline void ifft_unnormalized(std::span<const Complex> x, std::span<Complex> y) {
    const int m = static_cast<int>(x.size());
    std::vector<Complex> c(m);
    for (int j = 0; j < m; ++j)
        c[j] = std::conj(x[j]);
    fft_forward(c, y);
    for (int j = 0; j < m; ++j)
        y[j] = std::conj(y[j]);
}

} // namespace detail

/// Unnormalized forward transform of one 1D slice (length plan.n_transform).
inline void forward(const TransformPlan& plan, std::span<const Complex> in,
                    std::span<Complex> out) {
    if (static_cast<int>(in.size()) != plan.n_transform ||
        static_cast<int>(out.size()) != plan.n_transform)
        throw InvalidPlanError("transform: length does not match plan");
    switch (plan.kind) {
        case TransformKind::Fft: detail::fft_kernel(in, out); break;
        case TransformKind::Dst1: detail::dst1_kernel(in, out); break;
        case TransformKind::Dct1: detail::dct1_kernel(in, out); break;
        case TransformKind::Dst2: detail::dst2_kernel(in, out); break;
        case TransformKind::Dst3: detail::dst3_kernel(in, out); break;
        case TransformKind::Dct2: detail::dct2_kernel(in, out); break;
        case TransformKind::Dct3: detail::dct3_kernel(in, out); break;
    }
}

/// Inverse transform: the partner kernel scaled by 1/N_FT. Dst1/Dct1 are
/// their own partners; Dst2<->Dst3 and Dct2<->Dct3 invert each other.
inline void inverse(const TransformPlan& plan, std::span<const Complex> in,
                    std::span<Complex> out) {
    if (static_cast<int>(in.size()) != plan.n_transform ||
        static_cast<int>(out.size()) != plan.n_transform)
        throw InvalidPlanError("transform: length does not match plan");
    switch (plan.kind) {
        case TransformKind::Fft: detail::ifft_unnormalized(in, out); break;
        case TransformKind::Dst1: detail::dst1_kernel(in, out); break;
        case TransformKind::Dct1: detail::dct1_kernel(in, out); break;
        case TransformKind::Dst2: detail::dst3_kernel(in, out); break;
        case TransformKind::Dst3: detail::dst2_kernel(in, out); break;
        case TransformKind::Dct2: detail::dct3_kernel(in, out); break;
        case TransformKind::Dct3: detail::dct2_kernel(in, out); break;
    }
    const double s = 1.0 / plan.n_logical;
    for (auto& v : out)
        v *= s;
}

inline SpectralCoefficients forward(const TransformPlan& plan,
                                    std::span<const Complex> in) {
    SpectralCoefficients c{std::vector<Complex>(plan.n_transform), plan};
    forward(plan, in, c.values);
    return c;
}

inline std::vector<Complex> inverse(const SpectralCoefficients& c) {
    std::vector<Complex> out(c.plan.n_transform);
    inverse(c.plan, c.values, out);
    return out;
}

enum class Direction { Forward, Inverse };

/// Apply a 1D transform independently to every slice along one dimension.
/// The field extent along `dim` must equal plan.n_transform.
inline void apply_along_dimension(Field& field, int dim, const TransformPlan& plan,
                                  Direction direction) {
    const auto& shape = field.shape();
    if (dim < 0 || dim >= field.rank())
        throw std::invalid_argument("apply_along_dimension: bad dimension");
    if (static_cast<int>(shape[dim]) != plan.n_transform)
        throw InvalidPlanError("apply_along_dimension: extent does not match plan");

    const std::size_t len = shape[dim];
    const std::size_t stride = field.stride(dim);
    std::size_t outer = 1;
    for (int i = 0; i < dim; ++i)
        outer *= shape[i];
    const std::size_t outer_stride = stride * len;

    std::vector<Complex> slice(len), transformed(len);
    for (int v = 0; v < field.components(); ++v) {
        auto comp = field.component(v);
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t in = 0; in < stride; ++in) {
                Complex* base = comp.data() + o * outer_stride + in;
                for (std::size_t j = 0; j < len; ++j)
                    slice[j] = base[j * stride];
                if (direction == Direction::Forward)
                    forward(plan, slice, transformed);
                else
                    inverse(plan, slice, transformed);
                for (std::size_t j = 0; j < len; ++j)
                    base[j * stride] = transformed[j];
            }
        }
    }
}

} // namespace trigpde

#endif
