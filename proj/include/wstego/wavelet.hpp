// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wstego {

/// Orthonormal scaling filter. The wavelet (high-pass) filter is derived as
/// the quadrature mirror h[m] = (-1)^m g[T-1-m].
class WaveletSpec {
public:
    /// Throws InvalidWavelet unless the taps form an orthonormal scaling filter
    /// (even count, sum sqrt(2), unit energy, even-shift orthogonality; 1e-10).
    WaveletSpec(std::string name, std::vector<double> lowpass);

    const std::string& name() const noexcept { return name_; }
    std::span<const double> lowpass() const noexcept { return lowpass_; }
    std::span<const double> highpass() const noexcept { return highpass_; }
    std::size_t taps() const noexcept { return lowpass_.size(); }

private:
    std::string name_;
    std::vector<double> lowpass_;
    std::vector<double> highpass_;
};

/// Names of the built-in wavelets, in a fixed order.
std::span<const std::string_view> builtin_wavelet_names();

/// Built-in wavelet lookup ("haar", "db2", "db4"). Throws UnknownWavelet.
const WaveletSpec& builtin_wavelet(std::string_view name);

bool is_builtin_wavelet(std::string_view name) noexcept;

inline constexpr std::string_view kDefaultWavelet = "db4";
inline constexpr int kDefaultLevels = 3;
inline constexpr int kMaxLevels = 10;

}  // namespace wstego
