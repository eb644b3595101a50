// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>

#include "test_support.hpp"
#include "wstego/embed.hpp"
#include "wstego/error.hpp"

using namespace wstego;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::IoError;
}

AudioSignal cover_of(std::vector<double> samples) { return {std::move(samples), 8000, SampleFormat::Float64}; }

StegoKey two_entry_key() {
    StegoKey key;
    key.wavelet = "db4";
    key.levels = 3;
    key.entries.push_back({Subband::detail(3), 40, "kQ7x2"});
    key.entries.push_back({Subband::detail(1), 900, "Zeb0aa9"});
    return key;
}

// First three decimals of |c| read off its decimal rendering.
int printed_digits(double c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", std::abs(c));
    const char* dot = std::strchr(buf, '.');
    return (dot[1] - '0') * 100 + (dot[2] - '0') * 10 + (dot[3] - '0');
}

}  // namespace

TEST_CASE("embed_chunk examples") {
    CHECK(embed_chunk(2.718281, Chunk{65}) == doctest::Approx(2.0655).epsilon(1e-14));
    CHECK(embed_chunk(-0.5, Chunk{123}) == doctest::Approx(-0.1235).epsilon(1e-14));
    CHECK(embed_chunk(0.0, Chunk{0}) == doctest::Approx(0.0005).epsilon(1e-14));
    CHECK(embed_chunk(-0.0, Chunk{7}) > 0.0);
    CHECK(embed_chunk(-3.99, Chunk{999}) == doctest::Approx(-3.9995).epsilon(1e-14));
    CHECK(code_of([] { embed_chunk(1.0, Chunk{1000}); }) == ErrorCode::ChunkOutOfRange);
}

TEST_CASE("extract_chunk examples") {
    CHECK(extract_chunk(2.0655).value == 65);
    CHECK(extract_chunk(-0.1235).value == 123);
    CHECK(extract_chunk(7.9995).value == 999);
    CHECK(extract_chunk(0.0).value == 0);
    CHECK(extract_chunk(std::nan("")).value == 999);
}

TEST_CASE("embed/extract chunk properties") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> coeff(-50.0, 50.0);
    std::uniform_real_distribution<double> noise(-4.99e-4, 4.99e-4);
    for (int i = 0; i < 20000; ++i) {
        const double c = coeff(rng);
        const Chunk d{static_cast<std::uint16_t>(rng() % 1000)};
        const double e = embed_chunk(c, d);
        CHECK(std::abs(e - c) < 1.0);
        CHECK(std::signbit(e) == (c < 0.0));
        const double frac = std::abs(e) - std::floor(std::abs(e));
        CHECK(frac >= 0.0005 - 1e-12);
        CHECK(frac <= 0.9995 + 1e-12);
        CHECK(extract_chunk(e) == d);
        CHECK(printed_digits(e) == d.value);
        // noise inside the margin leaves the chunk intact
        const double noisy = e + noise(rng);
        CHECK(extract_chunk(noisy) == d);
    }
}

TEST_CASE("pipeline round trip, locality and distortion accounting") {
    std::mt19937_64 rng(404);
    const auto key = two_entry_key();
    for (std::size_t n : {8000u, 16384u, 9001u}) {
        CAPTURE(n);
        const auto cover = cover_of(test::random_signal(rng, n));
        const auto& w = builtin_wavelet(key.wavelet);
        const auto before = wavedec(cover.samples, w, key.levels);
        const std::size_t cap = capacity_bytes(key, before.lengths);
        CHECK(cap == 6 + 8 - 2);
        const auto payload = test::random_bytes(rng, cap);

        const auto result = embed(cover, key, payload);
        CHECK(result.stego.samples.size() == n);
        CHECK(extract(result.stego, key) == payload);
        CHECK(result.report.modified_count == payload.size() + 2);
        CHECK(result.report.payload_bytes == payload.size());
        CHECK(result.report.capacity_bytes == cap);
        CHECK(result.report.coeff_l2_delta <= std::sqrt(static_cast<double>(result.report.modified_count)));
        CHECK(result.report.predicted_audio_l2_delta == result.report.coeff_l2_delta);

        // tail untouched
        for (std::size_t i = before.coeffs.size(); i < n; ++i) CHECK(result.stego.samples[i] == cover.samples[i]);

        // audio-domain L2 matches coefficient-domain L2
        double audio_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) audio_sq += std::pow(result.stego.samples[i] - cover.samples[i], 2);
        const double coeff_sq = result.report.coeff_l2_delta * result.report.coeff_l2_delta;
        CHECK(std::abs(audio_sq - coeff_sq) <= 1e-9 * coeff_sq);

        // coefficient domain: only planned positions change
        auto after = before;
        const auto plan = embed_into(after, key, payload);
        std::vector<bool> planned(after.coeffs.size(), false);
        for (auto p : plan.positions) planned[p] = true;
        std::size_t changed = 0;
        for (std::size_t i = 0; i < after.coeffs.size(); ++i) {
            if (!planned[i]) {
                CHECK(after.coeffs[i] == before.coeffs[i]);
            } else {
                ++changed;
                const double a = std::abs(after.coeffs[i]);
                const double frac = a - std::floor(a);
                CHECK(frac >= 0.0005 - 1e-12);
                CHECK(frac <= 0.9995 + 1e-12);
            }
        }
        CHECK(changed == payload.size() + 2);
        CHECK(extract_from(after, key) == payload);
    }
}

TEST_CASE("empty payload modifies exactly the header coefficients") {
    std::mt19937_64 rng(5);
    const auto cover = cover_of(test::random_signal(rng, 8192));
    const auto key = two_entry_key();
    const auto& w = builtin_wavelet(key.wavelet);
    auto d = wavedec(cover.samples, w, key.levels);
    const auto original = d.coeffs;
    embed_into(d, key, {});
    std::size_t changed = 0;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) changed += d.coeffs[i] != original[i];
    CHECK(changed == 2);
    const auto result = embed(cover, key, {});
    CHECK(result.report.modified_count == 2);
    CHECK(extract(result.stego, key).empty());
}

TEST_CASE("pipeline errors") {
    std::mt19937_64 rng(6);
    const auto cover = cover_of(test::random_signal(rng, 8000));
    auto key = two_entry_key();
    const std::vector<std::uint8_t> too_long(13, 1);
    CHECK(code_of([&] { embed(cover, key, too_long); }) == ErrorCode::CapacityExceeded);
    CHECK(code_of([&] { embed(cover, key, {}, EmbedOptions{SampleFormat::Pcm16}); }) ==
          ErrorCode::UnsupportedStegoFormat);
    key.entries[1].start = 3900;
    CHECK(code_of([&] { embed(cover, key, {}); }) == ErrorCode::PositionOutOfSubband);
    CHECK(code_of([&] { embed(cover_of(std::vector<double>(4, 0.1)), two_entry_key(), {}); }) ==
          ErrorCode::TooManyLevels);
}

TEST_CASE("float32 storage is covered by the self-check") {
    std::mt19937_64 rng(7);
    const auto cover = cover_of(test::random_signal(rng, 16384));
    const auto key = two_entry_key();
    const auto payload = test::random_bytes(rng, 12);
    const auto result = embed(cover, key, payload, EmbedOptions{SampleFormat::Float32});
    for (double s : result.stego.samples) CHECK(static_cast<double>(static_cast<float>(s)) == s);
    const auto reread = read_wav(write_wav(result.stego, WavFormat::for_samples(SampleFormat::Float32, 8000)));
    CHECK(extract(reread, key) == payload);
}

TEST_CASE("unmodified cover is mostly rejected, never crashes") {
    std::mt19937_64 rng(8);
    int rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto cover = cover_of(test::random_signal(rng, 16384));
        const auto key = test::random_key(rng, 16384, "db4", 3, 2, 8, 16);
        try {
            extract(cover, key);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::IntegrityError);
            ++rejected;
        }
    }
    CHECK(rejected >= 80);
}
