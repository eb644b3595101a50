// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace wstego {

enum class SampleFormat { Pcm16, Float32, Float64 };

/// Mono audio with samples normalized to nominal [-1, 1).
struct AudioSignal {
    std::vector<double> samples;
    std::uint32_t sample_rate = 0;
    SampleFormat source_format = SampleFormat::Float64;
};

struct WavFormat {
    std::uint16_t format_code = 3;  // 1 = integer PCM, 3 = IEEE float
    std::uint16_t bits_per_sample = 64;
    std::uint16_t channels = 1;
    std::uint32_t sample_rate = 0;

    static WavFormat for_samples(SampleFormat format, std::uint32_t sample_rate);
    SampleFormat sample_format() const;  // throws UnsupportedFormat
};

AudioSignal read_wav(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_wav(const AudioSignal& signal, const WavFormat& format);

AudioSignal read_wav_file(const std::filesystem::path& path);
void write_wav_file(const std::filesystem::path& path, const AudioSignal& signal,
                    const WavFormat& format);

/// pcm16 quantizer used by write_wav: clamp to [-1, 32767/32768], round(s * 32768).
std::int16_t quantize_pcm16(double sample) noexcept;

/// Value a sample takes after storage in `format` and reading back.
double storage_round_trip(double sample, SampleFormat format) noexcept;

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace wstego
