// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/wavelet.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "wstego/error.hpp"

namespace wstego {

namespace {

constexpr double kTolerance = 1e-10;

void check_orthonormal(const std::string& name, const std::vector<double>& g) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::InvalidWavelet, "wavelet '" + name + "': " + why);
    };
    if (g.empty() || g.size() % 2 != 0) fail("tap count must be even and non-zero");
    for (double v : g) {
        if (!std::isfinite(v)) fail("non-finite tap");
    }
    const double sum = std::accumulate(g.begin(), g.end(), 0.0);
    if (std::abs(sum - std::sqrt(2.0)) > kTolerance) fail("taps must sum to sqrt(2)");
    for (std::size_t shift = 0; shift < g.size(); shift += 2) {
        double acc = 0.0;
        for (std::size_t m = 0; m + shift < g.size(); ++m) acc += g[m] * g[m + shift];
        const double expected = shift == 0 ? 1.0 : 0.0;
        if (std::abs(acc - expected) > kTolerance) {
            fail(shift == 0 ? "taps must have unit energy"
                            : "taps are not orthogonal to even shifts");
        }
    }
}

// Daubechies minimum-phase scaling filters, computed by spectral
// factorization in extended precision and rounded to double.
const std::vector<double> kHaarTaps = {
    0.70710678118654752440,
    0.70710678118654752440,
};

const std::vector<double> kDb2Taps = {
    0.48296291314453414337,
    0.83651630373780790558,
    0.22414386804201338103,
    -0.12940952255126038117,
};

const std::vector<double> kDb4Taps = {
    0.23037781330889650086,
    0.71484657055291564709,
    0.63088076792985890788,
    -0.027983769416859854211,
    -0.18703481171909308408,
    0.030841381835560763627,
    0.032883011666885199735,
    -0.010597401785069032105,
};

constexpr std::array<std::string_view, 3> kNames = {"haar", "db2", "db4"};

}  // namespace

WaveletSpec::WaveletSpec(std::string name, std::vector<double> lowpass)
    : name_(std::move(name)), lowpass_(std::move(lowpass)) {
    check_orthonormal(name_, lowpass_);
    const std::size_t taps = lowpass_.size();
    highpass_.resize(taps);
    for (std::size_t m = 0; m < taps; ++m) {
        const double mirrored = lowpass_[taps - 1 - m];
        highpass_[m] = (m % 2 == 0) ? mirrored : -mirrored;
    }
}

std::span<const std::string_view> builtin_wavelet_names() { return kNames; }

bool is_builtin_wavelet(std::string_view name) noexcept {
    for (auto n : kNames) {
        if (n == name) return true;
    }
    return false;
}

const WaveletSpec& builtin_wavelet(std::string_view name) {
    static const WaveletSpec haar("haar", kHaarTaps);
    static const WaveletSpec db2("db2", kDb2Taps);
    static const WaveletSpec db4("db4", kDb4Taps);
    if (name == "haar") return haar;
    if (name == "db2") return db2;
    if (name == "db4") return db4;
    throw Error(ErrorCode::UnknownWavelet, "unknown wavelet '" + std::string(name) + "'");
}

}  // namespace wstego
