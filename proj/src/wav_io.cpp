// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/wav_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <string>

#include "wstego/error.hpp"

namespace wstego {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
    std::size_t position() const noexcept { return pos_; }

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (n > remaining()) {
            throw Error(ErrorCode::TruncatedFile, std::string("truncated while reading ") + what);
        }
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::uint16_t u16(const char* what) {
        auto b = take(2, what);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }

    std::uint32_t u32(const char* what) {
        auto b = take(4, what);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

bool tag_is(std::span<const std::uint8_t> b, const char* tag) {
    return std::memcmp(b.data(), tag, 4) == 0;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int shift = 0; shift < 64; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

std::uint64_t load_le(const std::uint8_t* p, std::size_t width) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

}  // namespace

WavFormat WavFormat::for_samples(SampleFormat format, std::uint32_t sample_rate) {
    switch (format) {
        case SampleFormat::Pcm16: return {kFormatPcm, 16, 1, sample_rate};
        case SampleFormat::Float32: return {kFormatFloat, 32, 1, sample_rate};
        case SampleFormat::Float64: return {kFormatFloat, 64, 1, sample_rate};
    }
    return {kFormatFloat, 64, 1, sample_rate};
}

SampleFormat WavFormat::sample_format() const {
    if (format_code == kFormatPcm && bits_per_sample == 16) return SampleFormat::Pcm16;
    if (format_code == kFormatFloat && bits_per_sample == 32) return SampleFormat::Float32;
    if (format_code == kFormatFloat && bits_per_sample == 64) return SampleFormat::Float64;
    throw Error(ErrorCode::UnsupportedFormat, "unsupported sample format: code " +
                                                  std::to_string(format_code) + ", " +
                                                  std::to_string(bits_per_sample) + " bits");
}

std::int16_t quantize_pcm16(double sample) noexcept {
    constexpr double kMax = 32767.0 / 32768.0;
    if (std::isnan(sample)) return 0;
    const double clamped = std::clamp(sample, -1.0, kMax);
    const double q = std::round(clamped * 32768.0);
    return static_cast<std::int16_t>(std::clamp(q, -32768.0, 32767.0));
}

double storage_round_trip(double sample, SampleFormat format) noexcept {
    switch (format) {
        case SampleFormat::Pcm16: return quantize_pcm16(sample) / 32768.0;
        case SampleFormat::Float32: return static_cast<double>(static_cast<float>(sample));
        case SampleFormat::Float64: return sample;
    }
    return sample;
}

AudioSignal read_wav(std::span<const std::uint8_t> bytes) {
    ByteReader reader(bytes);
    if (bytes.size() < 12 || !tag_is(bytes.subspan(0, 4), "RIFF") ||
        !tag_is(bytes.subspan(8, 4), "WAVE")) {
        throw Error(ErrorCode::NotRiff, "not a RIFF/WAVE stream");
    }
    reader.take(12, "RIFF header");

    std::optional<WavFormat> format;
    std::optional<std::span<const std::uint8_t>> data;
    while (reader.remaining() >= 8 && !(format && data)) {
        const auto tag = reader.take(4, "chunk id");
        const std::uint32_t size = reader.u32("chunk size");
        if (tag_is(tag, "fmt ")) {
            if (size < 16) throw Error(ErrorCode::UnsupportedFormat, "fmt chunk shorter than 16 bytes");
            ByteReader fmt(reader.take(size, "fmt chunk"));
            WavFormat f;
            f.format_code = fmt.u16("format code");
            f.channels = fmt.u16("channel count");
            f.sample_rate = fmt.u32("sample rate");
            fmt.u32("byte rate");
            fmt.u16("block align");
            f.bits_per_sample = fmt.u16("bits per sample");
            format = f;
        } else if (tag_is(tag, "data")) {
            data = reader.take(size, "data chunk");
        } else {
            reader.take(size, "chunk body");
        }
        if (size % 2 != 0 && reader.remaining() > 0) reader.take(1, "chunk padding");
    }
    if (!format) throw Error(ErrorCode::TruncatedFile, "missing fmt chunk");
    if (!data) throw Error(ErrorCode::TruncatedFile, "missing data chunk");
    if (format->channels != 1) {
        throw Error(ErrorCode::UnsupportedChannelCount,
                    "only mono audio is supported, got " + std::to_string(format->channels) +
                        " channels");
    }
    const SampleFormat sf = format->sample_format();
    if (format->sample_rate == 0) throw Error(ErrorCode::UnsupportedFormat, "sample rate is zero");

    const std::size_t width = format->bits_per_sample / 8;
    if (data->size() % width != 0) {
        throw Error(ErrorCode::TruncatedFile, "data chunk ends inside a sample");
    }
    AudioSignal signal;
    signal.sample_rate = format->sample_rate;
    signal.source_format = sf;
    signal.samples.resize(data->size() / width);
    const std::uint8_t* p = data->data();
    for (double& s : signal.samples) {
        const std::uint64_t raw = load_le(p, width);
        switch (sf) {
            case SampleFormat::Pcm16:
                s = static_cast<std::int16_t>(static_cast<std::uint16_t>(raw)) / 32768.0;
                break;
            case SampleFormat::Float32:
                s = std::bit_cast<float>(static_cast<std::uint32_t>(raw));
                break;
            case SampleFormat::Float64:
                s = std::bit_cast<double>(raw);
                break;
        }
        p += width;
    }
    return signal;
}

std::vector<std::uint8_t> write_wav(const AudioSignal& signal, const WavFormat& format) {
    if (signal.samples.empty()) throw Error(ErrorCode::EmptySignal, "cannot write an empty signal");
    if (format.channels != 1) {
        throw Error(ErrorCode::UnsupportedChannelCount, "only mono output is supported");
    }
    const SampleFormat sf = format.sample_format();
    const std::uint32_t rate = format.sample_rate != 0 ? format.sample_rate : signal.sample_rate;
    if (rate == 0) throw Error(ErrorCode::UnsupportedFormat, "sample rate is zero");

    const std::uint16_t width = format.bits_per_sample / 8;
    const std::uint64_t data_bytes = static_cast<std::uint64_t>(signal.samples.size()) * width;
    if (data_bytes + 36 > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::UnsupportedFormat, "signal too large for a RIFF container");
    }

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    put_tag(out, "RIFF");
    put_u32(out, static_cast<std::uint32_t>(36 + data_bytes));
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, format.format_code);
    put_u16(out, 1);
    put_u32(out, rate);
    put_u32(out, rate * width);
    put_u16(out, width);
    put_u16(out, format.bits_per_sample);
    put_tag(out, "data");
    put_u32(out, static_cast<std::uint32_t>(data_bytes));
    for (double s : signal.samples) {
        switch (sf) {
            case SampleFormat::Pcm16:
                put_u16(out, static_cast<std::uint16_t>(quantize_pcm16(s)));
                break;
            case SampleFormat::Float32:
                put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(s)));
                break;
            case SampleFormat::Float64:
                put_u64(out, std::bit_cast<std::uint64_t>(s));
                break;
        }
    }
    return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::IoError, "read failed on '" + path.string() + "'");
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "write failed on '" + path.string() + "'");
}

AudioSignal read_wav_file(const std::filesystem::path& path) { return read_wav(read_file_bytes(path)); }

void write_wav_file(const std::filesystem::path& path, const AudioSignal& signal,
                    const WavFormat& format) {
    write_file_bytes(path, write_wav(signal, format));
}

}  // namespace wstego
