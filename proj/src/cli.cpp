// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "wstego/embed.hpp"
#include "wstego/metrics.hpp"
#include "wstego/wav_io.hpp"

namespace wstego::cli {

namespace {

constexpr std::string_view kAlphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '"', '\'');
    return s;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

void report_error(std::ostream& err, ErrorCode code, const std::string& message) {
    err << "wstego-error code=" << error_name(code) << " status=" << exit_status(code)
        << " message=\"" << one_line(message) << "\"\n";
}

StegoKey load_key(const std::string& path) {
    const auto bytes = read_file_bytes(path);
    return parse_key(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

// Bookkeeping vector a periodized decomposition of `samples` would have.
std::vector<std::size_t> nominal_lengths(std::size_t samples, int levels) {
    const std::size_t block = std::size_t{1} << levels;
    const std::size_t dyadic = samples / block * block;
    std::vector<std::size_t> lengths;
    lengths.push_back(dyadic >> levels);
    for (int l = levels; l >= 1; --l) lengths.push_back(dyadic >> l);
    lengths.push_back(samples);
    return lengths;
}

std::optional<Subband> parse_subband(std::string_view s) {
    if (s == "A") return Subband::approximation();
    if (s.size() < 2 || s[0] != 'D') return std::nullopt;
    int level = 0;
    for (char c : s.substr(1)) {
        if (c < '0' || c > '9' || level > 1000) return std::nullopt;
        level = level * 10 + (c - '0');
    }
    return Subband::detail(level);
}

int cmd_embed(const std::string& cover_path, const std::string& key_path,
              const std::string& message_path, const std::string& out_path,
              const std::string& format_name, std::ostream& out) {
    SampleFormat storage = SampleFormat::Float64;
    if (format_name == "float32") {
        storage = SampleFormat::Float32;
    } else if (format_name == "pcm16") {
        throw Error(ErrorCode::UnsupportedStegoFormat,
                    "stego output cannot be pcm16; use float64 or float32");
    } else if (format_name != "float64") {
        throw Error(ErrorCode::UnsupportedFormat, "unknown output format '" + format_name + "'");
    }
    const StegoKey key = load_key(key_path);
    const AudioSignal cover = read_wav_file(cover_path);
    const auto message = read_file_bytes(message_path);

    const EmbedResult result = embed(cover, key, message, EmbedOptions{storage});
    write_wav_file(out_path, result.stego, WavFormat::for_samples(storage, cover.sample_rate));
    const DistortionReport dist = snr_db(cover, result.stego);

    const auto& r = result.report;
    out << "capacity: " << r.capacity_bytes << " bytes\n"
        << "embedded: " << r.payload_bytes << " bytes in " << r.modified_count << " coefficients\n"
        << "snr vs cover: " << format_double(dist.snr_db) << " dB\n";
    out << "wstego-report command=embed capacity_bytes=" << r.capacity_bytes
        << " payload_bytes=" << r.payload_bytes << " modified_count=" << r.modified_count
        << " coeff_l2_delta=" << format_double(r.coeff_l2_delta)
        << " snr_db=" << format_double(dist.snr_db)
        << " max_abs_diff=" << format_double(dist.max_abs_diff) << " format=" << format_name << "\n";
    return kExitOk;
}

int cmd_extract(const std::string& stego_path, const std::string& key_path,
                const std::string& out_path, std::ostream& out) {
    const StegoKey key = load_key(key_path);
    const AudioSignal stego = read_wav_file(stego_path);
    const auto message = extract(stego, key);
    write_file_bytes(out_path, message);
    out << "recovered: " << message.size() << " bytes\n";
    out << "wstego-report command=extract payload_bytes=" << message.size() << "\n";
    return kExitOk;
}

int cmd_capacity(const std::string& cover_path, const std::string& key_path, std::ostream& out) {
    const StegoKey key = load_key(key_path);
    validate_key(key);
    const AudioSignal cover = read_wav_file(cover_path);
    const Decomposition d = wavedec(cover.samples, builtin_wavelet(key.wavelet), key.levels);
    out << capacity_bytes(key, d.lengths) << "\n";
    return kExitOk;
}

int cmd_inspect(const std::string& cover_path, const std::string& stego_path, std::ostream& out) {
    const AudioSignal cover = read_wav_file(cover_path);
    const AudioSignal stego = read_wav_file(stego_path);
    const DistortionReport r = snr_db(cover, stego);
    out << "samples: " << r.samples_compared << "\n"
        << "snr: " << format_double(r.snr_db) << " dB\n"
        << "max abs diff: " << format_double(r.max_abs_diff) << "\n"
        << "rms diff: " << format_double(r.rms_diff) << "\n";
    out << "wstego-report command=inspect snr_db=" << format_double(r.snr_db)
        << " max_abs_diff=" << format_double(r.max_abs_diff)
        << " rms_diff=" << format_double(r.rms_diff) << " samples_compared=" << r.samples_compared
        << "\n";
    return kExitOk;
}

int cmd_keygen(const std::string& wavelet, int levels, const std::vector<std::string>& specs,
               std::optional<std::uint64_t> seed, const std::string& out_path, std::ostream& out) {
    KeygenRequest request;
    request.wavelet = wavelet;
    request.levels = levels;
    request.seed = seed ? *seed : std::random_device{}();
    for (const auto& spec : specs) {
        const auto colon = spec.find(':');
        const auto band = parse_subband(std::string_view(spec).substr(0, colon));
        std::size_t length = 0;
        bool length_ok = colon != std::string::npos && colon + 1 < spec.size();
        for (std::size_t i = colon + 1; length_ok && i < spec.size(); ++i) {
            const char c = spec[i];
            if (c < '0' || c > '9' || length > 100000) length_ok = false;
            else length = length * 10 + static_cast<std::size_t>(c - '0');
        }
        if (!band || !length_ok || length == 0) {
            throw Error(ErrorCode::KeySyntaxError,
                        "entry '" + spec + "' must look like D<level>:<password length> or A:<length>");
        }
        request.entries.emplace_back(*band, length);
    }
    const std::string text = serialize_key(generate_key(request));
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        write_file_bytes(out_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }
    return kExitOk;
}

}  // namespace

int exit_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::CapacityExceeded:
        case ErrorCode::PositionOutOfSubband:
        case ErrorCode::PayloadTooLong:
            return kExitCapacity;
        case ErrorCode::KeySyntaxError:
        case ErrorCode::UnknownWavelet:
        case ErrorCode::DuplicateSubband:
        case ErrorCode::BadLevelReference:
        case ErrorCode::InvalidKeyCharacter:
        case ErrorCode::InvalidWavelet:
            return kExitKey;
        case ErrorCode::SelfCheckFailed:
            return kExitSelfCheck;
        case ErrorCode::IntegrityError:
            return kExitIntegrity;
        default:
            return kExitFormat;
    }
}

StegoKey generate_key(const KeygenRequest& request) {
    StegoKey key;
    key.wavelet = request.wavelet;
    key.levels = request.levels;
    if (!is_builtin_wavelet(key.wavelet)) {
        throw Error(ErrorCode::UnknownWavelet, "unknown wavelet '" + key.wavelet + "'");
    }
    if (key.levels < 1 || key.levels > kMaxLevels) {
        throw Error(ErrorCode::BadLevelReference,
                    "levels must be within 1.." + std::to_string(kMaxLevels));
    }
    if (request.entries.empty()) throw Error(ErrorCode::KeySyntaxError, "keygen needs at least one entry");

    const auto lengths = nominal_lengths(kNominalCoverSamples, key.levels);
    std::mt19937_64 rng(request.seed);
    for (const auto& [band, password_length] : request.entries) {
        // Rejects bad levels and duplicates before any drawing happens.
        const IndexRange range = subband_range(lengths, band);
        for (const auto& e : key.entries) {
            if (e.subband == band) {
                throw Error(ErrorCode::DuplicateSubband, "subband " + band.to_string() + " requested twice");
            }
        }
        KeyEntry entry;
        entry.subband = band;
        std::size_t span = 0;
        for (std::size_t i = 0; i < password_length; ++i) {
            const char c = kAlphabet[rng() % kAlphabet.size()];
            entry.password.push_back(c);
            span += static_cast<std::size_t>(step_of(c));
        }
        if (span >= range.length) {
            throw Error(ErrorCode::PositionOutOfSubband,
                        "a " + std::to_string(password_length) + "-character password does not fit in " +
                            band.to_string() + " (" + std::to_string(range.length) +
                            " coefficients for a 1 s, 8 kHz cover)");
        }
        // Start in the first half of the subband, with room for the whole stride.
        const std::size_t upper = std::min((range.length - 1) / 2, range.length - 1 - span);
        entry.start = static_cast<std::size_t>(rng() % (upper + 1));
        key.entries.push_back(std::move(entry));
    }
    validate_key(key);
    return key;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wavelet-domain audio steganography"};
    app.require_subcommand(1);

    std::string cover, stego, key, message, output, format = "float64";
    auto* embed_cmd = app.add_subcommand("embed", "Hide a message file inside a mono WAV cover");
    embed_cmd->add_option("--cover", cover, "Cover WAV file")->required();
    embed_cmd->add_option("--key", key, "Stego-key file")->required();
    embed_cmd->add_option("--message", message, "Message bytes (encrypt beforehand)")->required();
    embed_cmd->add_option("--out", output, "Stego WAV to write")->required();
    embed_cmd->add_option("--format", format, "Stego sample format: float64 or float32");

    auto* extract_cmd = app.add_subcommand("extract", "Recover a hidden message");
    extract_cmd->add_option("--stego", stego, "Stego WAV file")->required();
    extract_cmd->add_option("--key", key, "Stego-key file")->required();
    extract_cmd->add_option("--out", output, "Where to write the recovered bytes")->required();

    auto* capacity_cmd = app.add_subcommand("capacity", "Print the payload capacity of a key over a cover");
    capacity_cmd->add_option("--cover", cover, "Cover WAV file")->required();
    capacity_cmd->add_option("--key", key, "Stego-key file")->required();

    std::string wavelet = std::string(kDefaultWavelet);
    int levels = kDefaultLevels;
    std::vector<std::string> entry_specs;
    std::optional<std::uint64_t> seed;
    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a random stego-key");
    keygen_cmd->add_option("--wavelet", wavelet, "haar, db2 or db4");
    keygen_cmd->add_option("--levels", levels, "Decomposition levels (1-10)");
    keygen_cmd->add_option("--entry", entry_specs, "Subband and password length, e.g. D3:8")->required();
    keygen_cmd->add_option("--seed", seed, "RNG seed for reproducible keys");
    keygen_cmd->add_option("--out", output, "Key file to write (default: stdout)");

    auto* inspect_cmd = app.add_subcommand("inspect", "Report distortion between cover and stego");
    inspect_cmd->add_option("--cover", cover, "Cover WAV file")->required();
    inspect_cmd->add_option("--stego", stego, "Stego WAV file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "wstego-error code=Usage status=" << kExitUsage << " message=\"" << one_line(e.what())
            << "\"\n";
        return kExitUsage;
    }

    try {
        if (*embed_cmd) return cmd_embed(cover, key, message, output, format, out);
        if (*extract_cmd) return cmd_extract(stego, key, output, out);
        if (*capacity_cmd) return cmd_capacity(cover, key, out);
        if (*keygen_cmd) return cmd_keygen(wavelet, levels, entry_specs, seed, output, out);
        if (*inspect_cmd) return cmd_inspect(cover, stego, out);
    } catch (const Error& e) {
        report_error(err, e.code(), e.what());
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << "wstego-error code=Internal status=" << kExitFormat << " message=\"" << one_line(e.what())
            << "\"\n";
        return kExitFormat;
    }
    return kExitUsage;
}

}  // namespace wstego::cli
