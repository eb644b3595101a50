// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <span>
#include <string_view>

// Single-level periodized filter-bank kernels. The scalar variant is the
// reference; SIMD variants must reproduce it bit for bit (same per-output
// accumulation order, no FMA contraction).

namespace wstego::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Widest available variant. Setting WSTEGO_ISA=scalar in the environment
/// pins the scalar reference.
Isa best_isa() noexcept;

/// approx[k] = sum_m lo[m] x[(2k+m) mod n], detail likewise with hi.
/// Requires approx.size() == detail.size() == x.size() / 2 and lo.size() == hi.size().
void analyze(Isa isa, std::span<const double> x, std::span<const double> lo,
             std::span<const double> hi, std::span<double> approx, std::span<double> detail);

/// Transpose of analyze: out[n] = sum_k approx[k] lo[(n-2k) mod N] + detail[k] hi[(n-2k) mod N].
/// Requires out.size() == 2 * approx.size().
void synthesize(Isa isa, std::span<const double> approx, std::span<const double> detail,
                std::span<const double> lo, std::span<const double> hi, std::span<double> out);

}  // namespace wstego::kernels
