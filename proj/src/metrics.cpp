// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wstego/error.hpp"

namespace wstego {

DistortionReport snr_db(const AudioSignal& reference, const AudioSignal& test) {
    if (reference.samples.size() != test.samples.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "signals differ in length: " + std::to_string(reference.samples.size()) +
                        " vs " + std::to_string(test.samples.size()));
    }
    if (reference.sample_rate != test.sample_rate) {
        throw Error(ErrorCode::RateMismatch, "signals differ in sample rate: " +
                                                 std::to_string(reference.sample_rate) + " vs " +
                                                 std::to_string(test.sample_rate));
    }
    double signal_energy = 0.0;
    double noise_energy = 0.0;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < reference.samples.size(); ++i) {
        const double r = reference.samples[i];
        const double diff = r - test.samples[i];
        signal_energy += r * r;
        noise_energy += diff * diff;
        max_abs = std::max(max_abs, std::abs(diff));
    }
    if (signal_energy == 0.0) throw Error(ErrorCode::ZeroReference, "reference signal has zero energy");

    DistortionReport report;
    report.samples_compared = reference.samples.size();
    report.max_abs_diff = max_abs;
    report.rms_diff = std::sqrt(noise_energy / static_cast<double>(report.samples_compared));
    report.snr_db = noise_energy == 0.0 ? std::numeric_limits<double>::infinity()
                                        : 10.0 * std::log10(signal_energy / noise_energy);
    return report;
}

}  // namespace wstego
