// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/embed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wstego/error.hpp"

namespace wstego {

double embed_chunk(double c, Chunk d) {
    if (d.value > 999) {
        throw Error(ErrorCode::ChunkOutOfRange,
                    "chunk value " + std::to_string(d.value) + " does not fit three digits");
    }
    const double sign = std::signbit(c) && c != 0.0 ? -1.0 : 1.0;
    const double whole = std::floor(std::abs(c));
    return sign * (whole + (static_cast<double>(d.value) + 0.5) / 1000.0);
}

Chunk extract_chunk(double c) noexcept {
    if (!std::isfinite(c)) return Chunk{999};
    const double a = std::abs(c);
    const double frac = a - std::floor(a);
    const double digits = std::clamp(std::floor(frac * 1000.0), 0.0, 999.0);
    return Chunk{static_cast<std::uint16_t>(digits)};
}

EmbeddingPlan embed_into(Decomposition& d, const StegoKey& key, std::span<const std::uint8_t> payload) {
    const auto chunks = encode_payload(payload).flatten();
    auto plan = plan_positions(key, d.lengths, chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        double& coeff = d.coeffs.at(plan.positions[i]);
        coeff = embed_chunk(coeff, chunks[i]);
    }
    return plan;
}

std::vector<std::uint8_t> extract_from(const Decomposition& d, const StegoKey& key) {
    const auto header_plan = plan_positions(key, d.lengths, kHeaderChunks);
    const std::size_t declared =
        decode_header(extract_chunk(d.coeffs.at(header_plan.positions[0])),
                      extract_chunk(d.coeffs.at(header_plan.positions[1])));
    // An over-long header is left for decode_payload to reject.
    const std::size_t wanted = std::min(declared + kHeaderChunks, total_slots(key));
    const auto plan = plan_positions(key, d.lengths, wanted);
    std::vector<Chunk> chunks;
    chunks.reserve(plan.positions.size());
    for (std::size_t pos : plan.positions) chunks.push_back(extract_chunk(d.coeffs.at(pos)));
    return decode_payload(chunks);
}

EmbedResult embed(const AudioSignal& cover, const StegoKey& key,
                  std::span<const std::uint8_t> payload, const EmbedOptions& options) {
    if (options.storage == SampleFormat::Pcm16) {
        throw Error(ErrorCode::UnsupportedStegoFormat,
                    "16-bit PCM cannot hold embedded digits; use float32 or float64 output");
    }
    validate_key(key);
    const WaveletSpec& w = builtin_wavelet(key.wavelet);
    Decomposition d = wavedec(cover.samples, w, key.levels);

    const std::size_t capacity = capacity_bytes(key, d.lengths);
    if (payload.size() > capacity) {
        throw Error(ErrorCode::CapacityExceeded, "payload of " + std::to_string(payload.size()) +
                                                     " bytes exceeds key capacity of " +
                                                     std::to_string(capacity) + " bytes");
    }

    const std::vector<double> original = d.coeffs;
    const EmbeddingPlan plan = embed_into(d, key, payload);

    double sq = 0.0;
    for (std::size_t pos : plan.positions) {
        const double delta = d.coeffs[pos] - original[pos];
        sq += delta * delta;
    }

    EmbedResult result;
    result.stego.sample_rate = cover.sample_rate;
    result.stego.source_format = options.storage;
    result.stego.samples = waverec(d, w);
    for (double& s : result.stego.samples) s = storage_round_trip(s, options.storage);

    result.report.modified_count = plan.positions.size();
    result.report.capacity_bytes = capacity;
    result.report.payload_bytes = payload.size();
    result.report.coeff_l2_delta = std::sqrt(sq);
    result.report.predicted_audio_l2_delta = result.report.coeff_l2_delta;

    bool verified = false;
    std::string why;
    try {
        const auto recovered = extract(result.stego, key);
        verified = std::equal(recovered.begin(), recovered.end(), payload.begin(), payload.end());
        if (!verified) why = "recovered bytes differ";
    } catch (const Error& e) {
        why = e.what();
    }
    if (!verified) {
        throw Error(ErrorCode::SelfCheckFailed, "embedded payload did not survive reconstruction: " + why);
    }
    return result;
}

std::vector<std::uint8_t> extract(const AudioSignal& stego, const StegoKey& key) {
    validate_key(key);
    const WaveletSpec& w = builtin_wavelet(key.wavelet);
    const Decomposition d = wavedec(stego.samples, w, key.levels);
    return extract_from(d, key);
}

}  // namespace wstego
