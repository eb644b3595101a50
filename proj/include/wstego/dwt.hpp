// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wstego/kernels.hpp"
#include "wstego/wavelet.hpp"

namespace wstego {

/// One block of the packed coefficient vector: the coarsest approximation A_J
/// or the detail band D_l, 1 <= l <= J.
struct Subband {
    enum class Kind { Approximation, Detail };

    Kind kind = Kind::Approximation;
    int level = 0;  // detail level; unused for the approximation

    static constexpr Subband approximation() noexcept { return {Kind::Approximation, 0}; }
    static constexpr Subband detail(int level) noexcept { return {Kind::Detail, level}; }

    bool is_approximation() const noexcept { return kind == Kind::Approximation; }

    /// "A" or "D<l>".
    std::string to_string() const;

    friend bool operator==(const Subband&, const Subband&) = default;
};

struct IndexRange {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct LevelCoefficients {
    std::vector<double> approx;
    std::vector<double> detail;
};

/// Multilevel periodized decomposition.
///
/// coeffs is packed as [A_J | D_J | ... | D_1]; lengths holds the matching
/// subband lengths followed by the original signal length (J + 2 entries).
/// Samples past the largest multiple of 2^J are not transformed and ride
/// along in `tail`.
struct Decomposition {
    std::vector<double> coeffs;
    std::vector<std::size_t> lengths;
    std::vector<double> tail;
    std::string wavelet;
    int levels = 0;

    IndexRange range(Subband band) const;
    std::span<double> subband(Subband band);
    std::span<const double> subband(Subband band) const;
};

/// Throws InconsistentBookkeeping unless `lengths` has the dyadic layout
/// described on Decomposition.
void check_bookkeeping(std::span<const std::size_t> lengths);

/// Location of a subband inside the packed vector described by `lengths`.
/// Throws BadLevelReference for detail levels outside [1, J].
IndexRange subband_range(std::span<const std::size_t> lengths, Subband band);

LevelCoefficients dwt_level(std::span<const double> x, const WaveletSpec& w,
                            kernels::Isa isa = kernels::best_isa());

std::vector<double> idwt_level(std::span<const double> approx, std::span<const double> detail,
                               const WaveletSpec& w, kernels::Isa isa = kernels::best_isa());

Decomposition wavedec(std::span<const double> x, const WaveletSpec& w, int levels,
                      kernels::Isa isa = kernels::best_isa());

std::vector<double> waverec(const Decomposition& d, const WaveletSpec& w,
                            kernels::Isa isa = kernels::best_isa());

}  // namespace wstego
