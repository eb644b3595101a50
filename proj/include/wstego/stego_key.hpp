// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wstego/dwt.hpp"

namespace wstego {

/// One placement rule: `password` strides through `subband` starting at the
/// subband-local offset `start`, giving password.size() + 1 slots.
struct KeyEntry {
    Subband subband;
    std::size_t start = 0;
    std::string password;

    friend bool operator==(const KeyEntry&, const KeyEntry&) = default;
};

struct StegoKey {
    std::string version = "v1";
    std::string wavelet = std::string(kDefaultWavelet);
    int levels = kDefaultLevels;
    std::vector<KeyEntry> entries;

    friend bool operator==(const StegoKey&, const StegoKey&) = default;
};

/// Global coefficient indices that carry chunks, in fill order.
struct EmbeddingPlan {
    std::vector<std::size_t> positions;
    std::vector<std::size_t> per_entry_counts;
};

/// Stride for a password character: '0'-'9' -> 1-10, 'A'-'Z' -> 11-36,
/// 'a'-'z' -> 37-62. Throws InvalidKeyCharacter otherwise.
int step_of(char c);

bool is_valid_password(std::string_view password) noexcept;

/// Structural checks that need no cover: known wavelet, 1 <= levels <= 10,
/// at least one entry, distinct subbands that exist for `levels`, and
/// alphanumeric passwords.
void validate_key(const StegoKey& key);

/// Subband-local offsets of every slot an entry offers.
std::vector<std::size_t> entry_offsets(const KeyEntry& entry);

/// Total chunk slots across all entries (header included).
std::size_t total_slots(const StegoKey& key) noexcept;

/// Entries are consumed greedily in key order. Every entry is bounds-checked
/// against `lengths` (PositionOutOfSubband) before the slot count is
/// (CapacityExceeded).
EmbeddingPlan plan_positions(const StegoKey& key, std::span<const std::size_t> lengths,
                             std::size_t chunks_needed);

/// Payload bytes the key can carry over a cover with bookkeeping `lengths`.
std::size_t capacity_bytes(const StegoKey& key, std::span<const std::size_t> lengths);

/// Parses the line-oriented key file format:
///
///     WSTEGO-KEY v1
///     wavelet: db4
///     levels: 3
///     entry: level=D3 start=17 password=k3Y
///
/// `#` starts a comment and blank lines are ignored. Syntax problems throw
/// KeySyntaxError with a line and column; semantic problems throw
/// UnknownWavelet, DuplicateSubband or BadLevelReference.
StegoKey parse_key(std::string_view text);

/// Canonical text form; parse_key(serialize_key(k)) == k.
std::string serialize_key(const StegoKey& key);

}  // namespace wstego
