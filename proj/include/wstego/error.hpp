// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wstego {

enum class ErrorCode {
    // wavelet engine
    OddLength,
    SignalTooShort,
    LengthMismatch,
    TooManyLevels,
    InvalidWavelet,
    InconsistentBookkeeping,
    // wav container
    NotRiff,
    UnsupportedChannelCount,
    UnsupportedFormat,
    TruncatedFile,
    EmptySignal,
    IoError,
    // payload framing
    PayloadTooLong,
    IntegrityError,
    // stego key
    InvalidKeyCharacter,
    KeySyntaxError,
    UnknownWavelet,
    DuplicateSubband,
    BadLevelReference,
    CapacityExceeded,
    PositionOutOfSubband,
    // embedding
    ChunkOutOfRange,
    SelfCheckFailed,
    UnsupportedStegoFormat,
    // metrics
    RateMismatch,
    ZeroReference,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Key file syntax error with a 1-based source location.
class KeySyntaxError : public Error {
public:
    KeySyntaxError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace wstego
