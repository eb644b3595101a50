// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace wstego::kernels::avx2 {

namespace {

// Scalar tails replicate the reference accumulation order exactly.
inline void analyze_one(const double* x, std::size_t n, const double* lo, const double* hi,
                        std::size_t taps, std::size_t k, double* approx, double* detail) {
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

inline void synthesize_one(const double* approx, const double* detail, std::size_t half,
                           const double* lo, const double* hi, std::size_t taps, std::size_t j,
                           double* out) {
    double even = 0.0;
    double odd = 0.0;
    for (std::size_t p = 0; p < taps / 2; ++p) {
        const std::size_t k = (j + half - (p % half)) % half;
        even += lo[2 * p] * approx[k];
        even += hi[2 * p] * detail[k];
        odd += lo[2 * p + 1] * approx[k];
        odd += hi[2 * p + 1] * detail[k];
    }
    out[2 * j] = even;
    out[2 * j + 1] = odd;
}

// Even-indexed elements of p[0..7] as one vector: [p0, p2, p4, p6].
inline __m256d load_even(const double* p) {
    const __m256d first = _mm256_loadu_pd(p);
    const __m256d second = _mm256_loadu_pd(p + 4);
    // [p0, p4, p2, p6] -> [p0, p2, p4, p6]
    return _mm256_permute4x64_pd(_mm256_unpacklo_pd(first, second), 0xD8);
}

}  // namespace

void analyze(const double* x, std::size_t n, const double* lo, const double* hi,
             std::size_t taps, double* approx, double* detail) {
    const std::size_t half = n / 2;
    std::size_t k = 0;
    // A block at k reads x[2k .. 2k + taps + 6] without wrapping.
    for (; 2 * k + taps + 7 <= n && k + 4 <= half; k += 4) {
        __m256d a = _mm256_setzero_pd();
        __m256d d = _mm256_setzero_pd();
        const double* base = x + 2 * k;
        for (std::size_t m = 0; m < taps; ++m) {
            const __m256d v = load_even(base + m);
            a = _mm256_add_pd(a, _mm256_mul_pd(_mm256_set1_pd(lo[m]), v));
            d = _mm256_add_pd(d, _mm256_mul_pd(_mm256_set1_pd(hi[m]), v));
        }
        _mm256_storeu_pd(approx + k, a);
        _mm256_storeu_pd(detail + k, d);
    }
    for (; k < half; ++k) analyze_one(x, n, lo, hi, taps, k, approx, detail);
}

void synthesize(const double* approx, const double* detail, std::size_t half,
                const double* lo, const double* hi, std::size_t taps, double* out) {
    const std::size_t pairs = taps / 2;
    std::size_t j = 0;
    // Outputs whose coefficient window j-p wraps are done by the scalar tail.
    for (; j < pairs - 1 && j < half; ++j) synthesize_one(approx, detail, half, lo, hi, taps, j, out);
    for (; j + 4 <= half; j += 4) {
        __m256d even = _mm256_setzero_pd();
        __m256d odd = _mm256_setzero_pd();
        for (std::size_t p = 0; p < pairs; ++p) {
            const __m256d a = _mm256_loadu_pd(approx + j - p);
            const __m256d d = _mm256_loadu_pd(detail + j - p);
            even = _mm256_add_pd(even, _mm256_mul_pd(_mm256_set1_pd(lo[2 * p]), a));
            even = _mm256_add_pd(even, _mm256_mul_pd(_mm256_set1_pd(hi[2 * p]), d));
            odd = _mm256_add_pd(odd, _mm256_mul_pd(_mm256_set1_pd(lo[2 * p + 1]), a));
            odd = _mm256_add_pd(odd, _mm256_mul_pd(_mm256_set1_pd(hi[2 * p + 1]), d));
        }
        // [e0, o0, e2, o2] and [e1, o1, e3, o3] -> [e0, o0, e1, o1], [e2, o2, e3, o3]
        const __m256d lo_pairs = _mm256_unpacklo_pd(even, odd);
        const __m256d hi_pairs = _mm256_unpackhi_pd(even, odd);
        _mm256_storeu_pd(out + 2 * j, _mm256_permute2f128_pd(lo_pairs, hi_pairs, 0x20));
        _mm256_storeu_pd(out + 2 * j + 4, _mm256_permute2f128_pd(lo_pairs, hi_pairs, 0x31));
    }
    for (; j < half; ++j) synthesize_one(approx, detail, half, lo, hi, taps, j, out);
}

}  // namespace wstego::kernels::avx2
