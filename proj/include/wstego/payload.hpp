// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wstego {

/// Three decimal digits (000-999) carried by one coefficient.
struct Chunk {
    std::uint16_t value = 0;

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

inline constexpr std::size_t kHeaderChunks = 2;
inline constexpr std::size_t kMaxPayloadBytes = 65535;

/// Big-endian 16-bit length header followed by one chunk per payload byte.
struct ChunkStream {
    std::array<Chunk, kHeaderChunks> header{};
    std::vector<Chunk> body;

    std::size_t size() const noexcept { return kHeaderChunks + body.size(); }
    std::vector<Chunk> flatten() const;
};

/// Throws PayloadTooLong above 65535 bytes.
ChunkStream encode_payload(std::span<const std::uint8_t> payload);

/// Payload length declared by two header chunks. Throws IntegrityError if
/// either exceeds 255.
std::size_t decode_header(Chunk high, Chunk low);

/// Reads the header, then exactly that many body chunks. Throws
/// IntegrityError on any chunk above 255 or when fewer chunks are available
/// than the header declares. Chunks beyond the declared length are ignored.
std::vector<std::uint8_t> decode_payload(std::span<const Chunk> chunks);

}  // namespace wstego
