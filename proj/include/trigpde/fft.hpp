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

#ifndef TRIGPDE_FFT_HPP
#define TRIGPDE_FFT_HPP

#include <complex>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>

#include <fftw3.h>

namespace trigpde::detail {

/// Cached unnormalized complex DFTs, Y_k = sum_j X_j exp(-2*pi*i*j*k/n).
/// Plans are created once per length and reused; execution copies through
/// the buffers the plan was created with, so callers may pass any memory.
class FftCache {
  public:
    static FftCache& instance() {
        static FftCache cache;
        return cache;
    }

    void forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out) {
        if (in.size() != out.size() || in.empty())
            throw std::invalid_argument("fft: bad buffer sizes");
        std::lock_guard<std::mutex> lock(mutex_);
        Entry& e = entry(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            e.in[i][0] = in[i].real();
            e.in[i][1] = in[i].imag();
        }
        fftw_execute(e.plan);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = {e.out[i][0], e.out[i][1]};
    }

  private:
    struct Entry {
        fftw_complex* in = nullptr;
        fftw_complex* out = nullptr;
        fftw_plan plan = nullptr;
    };

    Entry& entry(std::size_t n) {
        auto it = entries_.find(n);
        if (it != entries_.end())
            return it->second;
        Entry e;
        e.in = fftw_alloc_complex(n);
        e.out = fftw_alloc_complex(n);
        e.plan = fftw_plan_dft_1d(static_cast<int>(n), e.in, e.out, FFTW_FORWARD,
                                  FFTW_ESTIMATE);
        if (!e.plan)
            throw std::runtime_error("fftw plan creation failed");
        return entries_.emplace(n, e).first->second;
    }

    FftCache() = default;
    ~FftCache() {
        for (auto& [n, e] : entries_) {
            fftw_destroy_plan(e.plan);
            fftw_free(e.in);
            fftw_free(e.out);
        }
    }
    FftCache(const FftCache&) = delete;
    FftCache& operator=(const FftCache&) = delete;

    std::mutex mutex_;
    std::map<std::size_t, Entry> entries_;
};

inline void fft_forward(std::span<const std::complex<double>> in,
                        std::span<std::complex<double>> out) {
    FftCache::instance().forward(in, out);
}

} // namespace trigpde::detail

#endif
