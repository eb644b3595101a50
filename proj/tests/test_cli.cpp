// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "wstego/cli.hpp"
#include "wstego/wav_io.hpp"

using namespace wstego;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "wstego");
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

void write_text(const std::filesystem::path& p, const std::string& s) {
    std::ofstream(p, std::ios::binary) << s;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void make_cover(const std::filesystem::path& p, std::size_t n = 8000, std::uint16_t channels = 1) {
    std::mt19937_64 rng(17);
    AudioSignal cover;
    cover.sample_rate = 8000;
    for (std::size_t i = 0; i < n; ++i) {
        cover.samples.push_back(0.5 * std::sin(2 * M_PI * 440.0 * static_cast<double>(i) / 8000.0) +
                                0.05 * (static_cast<double>(rng() % 2001) / 1000.0 - 1.0));
    }
    WavFormat fmt = WavFormat::for_samples(SampleFormat::Pcm16, 8000);
    auto bytes = write_wav(cover, fmt);
    if (channels != 1) bytes[22] = static_cast<std::uint8_t>(channels);
    write_file_bytes(p, bytes);
}

const std::string kKey3 =
    "WSTEGO-KEY v1\nwavelet: db4\nlevels: 3\nentry: level=D2 start=10 password=Ab3x\n";

bool single_error_line(const std::string& err) {
    return err.rfind("wstego-error code=", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_CASE("embed then extract round trip") {
    test::TempDir dir;
    make_cover(dir / "cover.wav");
    write_text(dir / "key.txt", kKey3);
    write_text(dir / "msg.bin", "k\x01\xff");

    auto r = run({"capacity", "--cover", (dir / "cover.wav").string(), "--key", (dir / "key.txt").string()});
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");

    r = run({"embed", "--cover", (dir / "cover.wav").string(), "--key", (dir / "key.txt").string(), "--message",
             (dir / "msg.bin").string(), "--out", (dir / "stego.wav").string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("wstego-report command=embed capacity_bytes=3 payload_bytes=3 modified_count=5") !=
          std::string::npos);

    r = run({"extract", "--stego", (dir / "stego.wav").string(), "--key", (dir / "key.txt").string(), "--out",
             (dir / "out.bin").string()});
    CHECK(r.status == 0);
    CHECK(read_text(dir / "out.bin") == read_text(dir / "msg.bin"));
    CHECK(read_wav_file(dir / "stego.wav").source_format == SampleFormat::Float64);

    r = run({"inspect", "--cover", (dir / "cover.wav").string(), "--stego", (dir / "stego.wav").string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("snr_db=inf") == std::string::npos);

    r = run({"inspect", "--cover", (dir / "cover.wav").string(), "--stego", (dir / "cover.wav").string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("snr_db=inf max_abs_diff=0") != std::string::npos);
}

TEST_CASE("float32 stego output") {
    test::TempDir dir;
    make_cover(dir / "cover.wav");
    write_text(dir / "key.txt", kKey3);
    write_text(dir / "msg.bin", "xyz");
    auto r = run({"embed", "--cover", (dir / "cover.wav").string(), "--key", (dir / "key.txt").string(), "--message",
                  (dir / "msg.bin").string(), "--out", (dir / "stego.wav").string(), "--format", "float32"});
    REQUIRE(r.status == 0);
    CHECK(read_wav_file(dir / "stego.wav").source_format == SampleFormat::Float32);
    r = run({"extract", "--stego", (dir / "stego.wav").string(), "--key", (dir / "key.txt").string(), "--out",
             (dir / "out.bin").string()});
    CHECK(r.status == 0);
    CHECK(read_text(dir / "out.bin") == "xyz");

    r = run({"embed", "--cover", (dir / "cover.wav").string(), "--key", (dir / "key.txt").string(), "--message",
             (dir / "msg.bin").string(), "--out", (dir / "s16.wav").string(), "--format", "pcm16"});
    CHECK(r.status == cli::kExitFormat);
    CHECK(r.err.find("UnsupportedStegoFormat") != std::string::npos);
}

TEST_CASE("documented exit codes") {
    test::TempDir dir;
    make_cover(dir / "cover.wav");
    make_cover(dir / "stereo.wav", 8000, 2);
    make_cover(dir / "short.wav", 4000);
    write_text(dir / "key.txt", kKey3);
    write_text(dir / "msg4.bin", "four");
    write_text(dir / "msg.bin", "abc");
    const std::string cover = (dir / "cover.wav").string();
    const std::string key = (dir / "key.txt").string();

    auto r = run({"embed", "--cover", cover, "--key", key, "--message", (dir / "msg4.bin").string(), "--out",
                  (dir / "s.wav").string()});
    CHECK(r.status == cli::kExitCapacity);
    CHECK(single_error_line(r.err));

    r = run({"embed", "--cover", (dir / "stereo.wav").string(), "--key", key, "--message", (dir / "msg.bin").string(),
             "--out", (dir / "s.wav").string()});
    CHECK(r.status == cli::kExitFormat);
    CHECK(r.err.find("UnsupportedChannelCount") != std::string::npos);

    write_text(dir / "bad.txt", "WSTEGO-KEY v1\nwavelet: db4\nlevels: 3\nentry: level=D9 start=0 password=abc\n");
    r = run({"capacity", "--cover", cover, "--key", (dir / "bad.txt").string()});
    CHECK(r.status == cli::kExitKey);
    CHECK(single_error_line(r.err));

    write_text(dir / "far.txt", "WSTEGO-KEY v1\nwavelet: db4\nlevels: 3\nentry: level=D3 start=995 password=zz\n");
    r = run({"capacity", "--cover", cover, "--key", (dir / "far.txt").string()});
    CHECK(r.status == cli::kExitCapacity);

    write_text(dir / "two.txt", "WSTEGO-KEY v1\nwavelet: db4\nlevels: 3\n"
                                "entry: level=D3 start=1 password=abc\nentry: level=D1 start=7 password=abcde\n");
    r = run({"capacity", "--cover", cover, "--key", (dir / "two.txt").string()});
    CHECK(r.status == 0);
    CHECK(r.out == "8\n");

    // embed, then extract with a different key and from a truncated file
    r = run({"embed", "--cover", cover, "--key", (dir / "two.txt").string(), "--message", (dir / "msg.bin").string(),
             "--out", (dir / "s.wav").string()});
    REQUIRE(r.status == 0);
    write_text(dir / "wrong.txt", "WSTEGO-KEY v1\nwavelet: db4\nlevels: 3\n"
                                  "entry: level=D3 start=1 password=Zbc\nentry: level=D1 start=7 password=abcde\n");
    r = run({"extract", "--stego", (dir / "s.wav").string(), "--key", (dir / "wrong.txt").string(), "--out",
             (dir / "o.bin").string()});
    CHECK(r.status == cli::kExitIntegrity);
    auto bytes = read_file_bytes(dir / "s.wav");
    bytes.resize(bytes.size() / 2);
    write_file_bytes(dir / "trunc.wav", bytes);
    r = run({"extract", "--stego", (dir / "trunc.wav").string(), "--key", (dir / "two.txt").string(), "--out",
             (dir / "o.bin").string()});
    CHECK(r.status == cli::kExitFormat);
    CHECK(r.err.find("TruncatedFile") != std::string::npos);

    r = run({"inspect", "--cover", cover, "--stego", (dir / "short.wav").string()});
    CHECK(r.status == cli::kExitFormat);

    r = run({"extract", "--stego", (dir / "missing.wav").string(), "--key", key, "--out", (dir / "o.bin").string()});
    CHECK(r.status == cli::kExitFormat);

    r = run({"frobnicate"});
    CHECK(r.status == cli::kExitUsage);
    CHECK(single_error_line(r.err));
}

TEST_CASE("keygen") {
    test::TempDir dir;
    auto a = run({"keygen", "--wavelet", "db4", "--levels", "3", "--entry", "D3:6", "--entry", "D1:20", "--entry",
                  "A:4", "--seed", "42"});
    auto b = run({"keygen", "--wavelet", "db4", "--levels", "3", "--entry", "D3:6", "--entry", "D1:20", "--entry",
                  "A:4", "--seed", "42"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto key = parse_key(a.out);
    CHECK(key.entries.size() == 3);
    CHECK(key.entries[1].password.size() == 20);

    auto c = run({"keygen", "--entry", "D3:6", "--seed", "43"});
    CHECK(c.status == 0);
    CHECK(c.out != a.out);

    auto f = run({"keygen", "--entry", "D2:12", "--seed", "7", "--out", (dir / "k.txt").string()});
    CHECK(f.status == 0);
    make_cover(dir / "cover.wav");
    auto cap = run({"capacity", "--cover", (dir / "cover.wav").string(), "--key", (dir / "k.txt").string()});
    CHECK(cap.status == 0);
    CHECK(cap.out == "11\n");

    CHECK(run({"keygen", "--levels", "3", "--entry", "D4:5"}).status == cli::kExitKey);
    CHECK(run({"keygen", "--levels", "11", "--entry", "D1:5"}).status == cli::kExitKey);
    CHECK(run({"keygen", "--wavelet", "coif1", "--entry", "D1:5"}).status == cli::kExitKey);
    CHECK(run({"keygen", "--entry", "D1:x"}).status == cli::kExitKey);
    CHECK(run({"keygen", "--entry", "D1:3", "--entry", "D1:3"}).status == cli::kExitKey);
}

TEST_CASE("generated keys always validate against the nominal cover") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        cli::KeygenRequest req;
        req.levels = 1 + static_cast<int>(seed % 6);
        req.seed = seed;
        req.entries.emplace_back(Subband::detail(1), 1 + seed % 30);
        req.entries.emplace_back(Subband::approximation(), 1);
        const auto key = cli::generate_key(req);
        const std::size_t block = std::size_t{1} << req.levels;
        const std::size_t dyadic = cli::kNominalCoverSamples / block * block;
        std::vector<std::size_t> lengths{dyadic >> req.levels};
        for (int l = req.levels; l >= 1; --l) lengths.push_back(dyadic >> l);
        lengths.push_back(cli::kNominalCoverSamples);
        CHECK_NOTHROW(capacity_bytes(key, lengths));
        for (const auto& e : key.entries) {
            CHECK(e.start <= (subband_range(lengths, e.subband).length - 1) / 2);
        }
        CHECK(parse_key(serialize_key(key)) == key);
    }
}
