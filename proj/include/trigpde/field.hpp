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

#ifndef TRIGPDE_FIELD_HPP
#define TRIGPDE_FIELD_HPP

#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace trigpde {

using Complex = std::complex<double>;

/// Multi-component complex lattice field on a d-dimensional rectangular
/// grid. Data is stored component-major, dimensions row-major.
class Field {
  public:
    Field() = default;

    Field(int components, std::vector<std::size_t> shape)
        : components_(components), shape_(std::move(shape)) {
        if (components_ < 1)
            throw std::invalid_argument("Field: component count must be >= 1");
        data_.assign(static_cast<std::size_t>(components_) * points(), Complex{});
    }

    static Field like(const Field& other) { return Field(other.components_, other.shape_); }

    int components() const { return components_; }
    const std::vector<std::size_t>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }

    std::size_t points() const {
        return std::accumulate(shape_.begin(), shape_.end(), std::size_t{1},
                               std::multiplies<>());
    }

    std::size_t size() const { return data_.size(); }

    std::span<Complex> component(int v) {
        return {data_.data() + static_cast<std::size_t>(v) * points(), points()};
    }
    std::span<const Complex> component(int v) const {
        return {data_.data() + static_cast<std::size_t>(v) * points(), points()};
    }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

    /// Stride (in elements) of dimension `dim` within one component.
    std::size_t stride(int dim) const {
        std::size_t s = 1;
        for (std::size_t i = dim + 1; i < shape_.size(); ++i)
            s *= shape_[i];
        return s;
    }

    bool same_shape(const Field& other) const {
        return components_ == other.components_ && shape_ == other.shape_;
    }

    Field& operator+=(const Field& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += rhs.data_[i];
        return *this;
    }
    Field& operator-=(const Field& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= rhs.data_[i];
        return *this;
    }
    Field& operator*=(Complex c) {
        for (auto& v : data_)
            v *= c;
        return *this;
    }

    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(Complex c, Field a) { return a *= c; }

    /// this += c * rhs
    void axpy(Complex c, const Field& rhs) {
        check(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += c * rhs.data_[i];
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_)
            m = std::max(m, std::abs(v));
        return m;
    }

    bool all_finite() const {
        for (const auto& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                return false;
        return true;
    }

  private:
    void check(const Field& rhs) const {
        if (!same_shape(rhs))
            throw std::invalid_argument("Field: shape mismatch");
    }

    int components_ = 0;
    std::vector<std::size_t> shape_;
    std::vector<Complex> data_;
};

} // namespace trigpde

#endif
