// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wstego/error.hpp"
#include "wstego/stego_key.hpp"

namespace wstego::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitKey = 3;
inline constexpr int kExitFormat = 4;
inline constexpr int kExitSelfCheck = 5;
inline constexpr int kExitIntegrity = 6;

int exit_status(ErrorCode code) noexcept;

struct KeygenRequest {
    std::string wavelet = "db4";
    int levels = 3;
    // (subband, password length) in key order
    std::vector<std::pair<Subband, std::size_t>> entries;
    std::uint64_t seed = 0;
};

/// Nominal cover length keygen sizes start offsets against (1 s at 8 kHz).
inline constexpr std::size_t kNominalCoverSamples = 8000;

StegoKey generate_key(const KeygenRequest& request);

/// Runs one command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wstego::cli
