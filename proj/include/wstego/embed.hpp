// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wstego/dwt.hpp"
#include "wstego/payload.hpp"
#include "wstego/stego_key.hpp"
#include "wstego/wav_io.hpp"

namespace wstego {

struct EmbedReport {
    std::size_t modified_count = 0;
    std::size_t capacity_bytes = 0;
    std::size_t payload_bytes = 0;
    double coeff_l2_delta = 0.0;
    // Equal to coeff_l2_delta: the periodized transform is an isometry.
    double predicted_audio_l2_delta = 0.0;
};

struct EmbedOptions {
    /// Precision the stego signal will be stored at. The returned samples are
    /// already rounded to it, and the self-check runs on them. Pcm16 is refused.
    SampleFormat storage = SampleFormat::Float64;
};

struct EmbedResult {
    AudioSignal stego;
    EmbedReport report;
};

/// Replaces the fractional part of |c| with (d + 0.5) / 1000, keeping the
/// sign and the integer part; -0.0 counts as positive. Throws ChunkOutOfRange
/// for d > 999.
double embed_chunk(double c, Chunk d);

/// First three decimals of |c|, i.e. floor(frac(|c|) * 1000) clamped to
/// [0, 999]. Non-finite input reads as 999.
Chunk extract_chunk(double c) noexcept;

/// Coefficient-domain embedding: writes the framed payload into `d` at the
/// positions the key selects and returns the plan used.
EmbeddingPlan embed_into(Decomposition& d, const StegoKey& key, std::span<const std::uint8_t> payload);

/// Coefficient-domain extraction. Reads the two header slots, then as many
/// body slots as the header declares (bounded by the key's slot count).
std::vector<std::uint8_t> extract_from(const Decomposition& d, const StegoKey& key);

/// Full pipeline: decompose, embed, reconstruct, then verify by extracting
/// from the produced signal. Throws CapacityExceeded, PositionOutOfSubband,
/// UnsupportedStegoFormat or SelfCheckFailed.
EmbedResult embed(const AudioSignal& cover, const StegoKey& key,
                  std::span<const std::uint8_t> payload, const EmbedOptions& options = {});

std::vector<std::uint8_t> extract(const AudioSignal& stego, const StegoKey& key);

}  // namespace wstego
