// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>

#include "wstego/wav_io.hpp"

namespace wstego {

struct DistortionReport {
    double snr_db = 0.0;  // +infinity when the signals are identical
    double max_abs_diff = 0.0;
    double rms_diff = 0.0;
    std::size_t samples_compared = 0;
};

/// 10 log10(sum ref^2 / sum (ref - test)^2). Throws LengthMismatch,
/// RateMismatch or ZeroReference.
DistortionReport snr_db(const AudioSignal& reference, const AudioSignal& test);

}  // namespace wstego
