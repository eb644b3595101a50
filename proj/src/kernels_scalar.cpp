// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "kernels_impl.hpp"

namespace wstego::kernels::scalar {

void analyze(const double* x, std::size_t n, const double* lo, const double* hi,
             std::size_t taps, double* approx, double* detail) {
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) {
        double a = 0.0;
        double d = 0.0;
        for (std::size_t m = 0; m < taps; ++m) {
            const double v = x[(2 * k + m) % n];
            a += lo[m] * v;
            d += hi[m] * v;
        }
        approx[k] = a;
        detail[k] = d;
    }
}

void synthesize(const double* approx, const double* detail, std::size_t half,
                const double* lo, const double* hi, std::size_t taps, double* out) {
    const std::size_t pairs = taps / 2;
    for (std::size_t j = 0; j < half; ++j) {
        double even = 0.0;
        double odd = 0.0;
        for (std::size_t p = 0; p < pairs; ++p) {
            // (j - p) mod half, without going negative
            const std::size_t k = (j + half - (p % half)) % half;
            even += lo[2 * p] * approx[k];
            even += hi[2 * p] * detail[k];
            odd += lo[2 * p + 1] * approx[k];
            odd += hi[2 * p + 1] * detail[k];
        }
        out[2 * j] = even;
        out[2 * j + 1] = odd;
    }
}

}  // namespace wstego::kernels::scalar
