// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/payload.hpp"

#include <string>

#include "wstego/error.hpp"

namespace wstego {

namespace {

std::uint8_t as_byte(Chunk c, std::size_t index) {
    if (c.value > 255) {
        throw Error(ErrorCode::IntegrityError, "chunk " + std::to_string(index) + " holds " +
                                                   std::to_string(c.value) +
                                                   ", not a byte (wrong key or damaged audio)");
    }
    return static_cast<std::uint8_t>(c.value);
}

}  // namespace

std::vector<Chunk> ChunkStream::flatten() const {
    std::vector<Chunk> out(header.begin(), header.end());
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

ChunkStream encode_payload(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayloadBytes) {
        throw Error(ErrorCode::PayloadTooLong, "payload of " + std::to_string(payload.size()) +
                                                   " bytes exceeds the 65535-byte limit");
    }
    ChunkStream stream;
    stream.header = {Chunk{static_cast<std::uint16_t>(payload.size() >> 8)},
                     Chunk{static_cast<std::uint16_t>(payload.size() & 0xFF)}};
    stream.body.reserve(payload.size());
    for (std::uint8_t b : payload) stream.body.push_back(Chunk{b});
    return stream;
}

std::size_t decode_header(Chunk high, Chunk low) {
    return (std::size_t{as_byte(high, 0)} << 8) | as_byte(low, 1);
}

std::vector<std::uint8_t> decode_payload(std::span<const Chunk> chunks) {
    if (chunks.size() < kHeaderChunks) {
        throw Error(ErrorCode::IntegrityError, "stream is shorter than its length header");
    }
    const std::size_t length = decode_header(chunks[0], chunks[1]);
    if (length > chunks.size() - kHeaderChunks) {
        throw Error(ErrorCode::IntegrityError,
                    "header declares " + std::to_string(length) + " bytes, only " +
                        std::to_string(chunks.size() - kHeaderChunks) + " chunks available");
    }
    std::vector<std::uint8_t> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(as_byte(chunks[kHeaderChunks + i], kHeaderChunks + i));
    }
    return out;
}

}  // namespace wstego
