// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>

// Raw-pointer kernel entry points. The AVX2 translation unit is built with
// -mavx2 and must not instantiate any shared inline templates, hence no
// std containers or spans at this boundary.

namespace wstego::kernels {

namespace scalar {
void analyze(const double* x, std::size_t n, const double* lo, const double* hi,
             std::size_t taps, double* approx, double* detail);
void synthesize(const double* approx, const double* detail, std::size_t half,
                const double* lo, const double* hi, std::size_t taps, double* out);
}  // namespace scalar

namespace avx2 {
void analyze(const double* x, std::size_t n, const double* lo, const double* hi,
             std::size_t taps, double* approx, double* detail);
void synthesize(const double* approx, const double* detail, std::size_t half,
                const double* lo, const double* hi, std::size_t taps, double* out);
}  // namespace avx2

}  // namespace wstego::kernels
