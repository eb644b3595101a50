// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/error.hpp"

namespace wstego {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::SignalTooShort: return "SignalTooShort";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::TooManyLevels: return "TooManyLevels";
        case ErrorCode::InvalidWavelet: return "InvalidWavelet";
        case ErrorCode::InconsistentBookkeeping: return "InconsistentBookkeeping";
        case ErrorCode::NotRiff: return "NotRiff";
        case ErrorCode::UnsupportedChannelCount: return "UnsupportedChannelCount";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::TruncatedFile: return "TruncatedFile";
        case ErrorCode::EmptySignal: return "EmptySignal";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::PayloadTooLong: return "PayloadTooLong";
        case ErrorCode::IntegrityError: return "IntegrityError";
        case ErrorCode::InvalidKeyCharacter: return "InvalidKeyCharacter";
        case ErrorCode::KeySyntaxError: return "KeySyntaxError";
        case ErrorCode::UnknownWavelet: return "UnknownWavelet";
        case ErrorCode::DuplicateSubband: return "DuplicateSubband";
        case ErrorCode::BadLevelReference: return "BadLevelReference";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::PositionOutOfSubband: return "PositionOutOfSubband";
        case ErrorCode::ChunkOutOfRange: return "ChunkOutOfRange";
        case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
        case ErrorCode::UnsupportedStegoFormat: return "UnsupportedStegoFormat";
        case ErrorCode::RateMismatch: return "RateMismatch";
        case ErrorCode::ZeroReference: return "ZeroReference";
    }
    return "Unknown";
}

KeySyntaxError::KeySyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : Error(ErrorCode::KeySyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace wstego
