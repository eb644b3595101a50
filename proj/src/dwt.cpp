// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/dwt.hpp"

#include <algorithm>
#include <numeric>

#include "wstego/error.hpp"

namespace wstego {

std::string Subband::to_string() const {
    return is_approximation() ? std::string("A") : "D" + std::to_string(level);
}

void check_bookkeeping(std::span<const std::size_t> lengths) {
    auto fail = [](const std::string& why) {
        throw Error(ErrorCode::InconsistentBookkeeping, "bookkeeping vector: " + why);
    };
    if (lengths.size() < 3) fail("needs at least 3 entries");
    const std::size_t levels = lengths.size() - 2;
    if (levels >= 63) fail("too many levels");
    if (lengths[0] == 0) fail("empty approximation band");
    if (lengths[0] != lengths[1]) fail("approximation and coarsest detail lengths differ");
    for (std::size_t k = 1; k < levels; ++k) {
        if (lengths[k + 1] != 2 * lengths[k]) fail("detail lengths are not dyadic");
    }
    const std::size_t dyadic = 2 * lengths[levels];
    const std::size_t original = lengths[levels + 1];
    if (original < dyadic || original - dyadic >= (std::size_t{1} << levels)) {
        fail("original length does not match the dyadic prefix");
    }
}

IndexRange subband_range(std::span<const std::size_t> lengths, Subband band) {
    check_bookkeeping(lengths);
    const int levels = static_cast<int>(lengths.size()) - 2;
    std::size_t index = 0;
    if (!band.is_approximation()) {
        if (band.level < 1 || band.level > levels) {
            throw Error(ErrorCode::BadLevelReference,
                        "subband " + band.to_string() + " does not exist with " +
                            std::to_string(levels) + " levels");
        }
        index = static_cast<std::size_t>(levels - band.level + 1);
    }
    const std::size_t offset =
        std::accumulate(lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(index),
                        std::size_t{0});
    return {offset, lengths[index]};
}

IndexRange Decomposition::range(Subband band) const { return subband_range(lengths, band); }

std::span<double> Decomposition::subband(Subband band) {
    const auto r = range(band);
    return std::span<double>(coeffs).subspan(r.offset, r.length);
}

std::span<const double> Decomposition::subband(Subband band) const {
    const auto r = range(band);
    return std::span<const double>(coeffs).subspan(r.offset, r.length);
}

LevelCoefficients dwt_level(std::span<const double> x, const WaveletSpec& w, kernels::Isa isa) {
    if (x.size() % 2 != 0) {
        throw Error(ErrorCode::OddLength,
                    "analysis step needs an even length, got " + std::to_string(x.size()));
    }
    if (x.size() < w.taps()) {
        throw Error(ErrorCode::SignalTooShort, "analysis step needs at least " +
                                                   std::to_string(w.taps()) + " samples for " +
                                                   w.name() + ", got " +
                                                   std::to_string(x.size()));
    }
    LevelCoefficients out;
    out.approx.resize(x.size() / 2);
    out.detail.resize(x.size() / 2);
    kernels::analyze(isa, x, w.lowpass(), w.highpass(), out.approx, out.detail);
    return out;
}

std::vector<double> idwt_level(std::span<const double> approx, std::span<const double> detail,
                               const WaveletSpec& w, kernels::Isa isa) {
    if (approx.size() != detail.size() || approx.empty()) {
        throw Error(ErrorCode::LengthMismatch,
                    "synthesis step needs equal non-empty bands, got " +
                        std::to_string(approx.size()) + " and " + std::to_string(detail.size()));
    }
    std::vector<double> out(2 * approx.size());
    kernels::synthesize(isa, approx, detail, w.lowpass(), w.highpass(), out);
    return out;
}

Decomposition wavedec(std::span<const double> x, const WaveletSpec& w, int levels,
                      kernels::Isa isa) {
    if (levels < 1 || levels >= 63 || (std::size_t{1} << levels) > x.size()) {
        throw Error(ErrorCode::TooManyLevels, std::to_string(levels) + " levels cannot be applied to " +
                                                  std::to_string(x.size()) + " samples");
    }
    const std::size_t block = std::size_t{1} << levels;
    const std::size_t dyadic = x.size() / block * block;

    Decomposition d;
    d.wavelet = w.name();
    d.levels = levels;
    d.tail.assign(x.begin() + static_cast<std::ptrdiff_t>(dyadic), x.end());

    // Details are produced finest first; pack them coarsest first.
    std::vector<std::vector<double>> details;
    details.reserve(static_cast<std::size_t>(levels));
    std::vector<double> approx(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dyadic));
    for (int level = 1; level <= levels; ++level) {
        auto step = dwt_level(approx, w, isa);
        approx = std::move(step.approx);
        details.push_back(std::move(step.detail));
    }

    d.coeffs.reserve(dyadic);
    d.coeffs.insert(d.coeffs.end(), approx.begin(), approx.end());
    d.lengths.push_back(approx.size());
    for (auto it = details.rbegin(); it != details.rend(); ++it) {
        d.coeffs.insert(d.coeffs.end(), it->begin(), it->end());
        d.lengths.push_back(it->size());
    }
    d.lengths.push_back(x.size());
    return d;
}

std::vector<double> waverec(const Decomposition& d, const WaveletSpec& w, kernels::Isa isa) {
    check_bookkeeping(d.lengths);
    const std::size_t levels = d.lengths.size() - 2;
    if (d.levels != 0 && static_cast<std::size_t>(d.levels) != levels) {
        throw Error(ErrorCode::InconsistentBookkeeping, "level count disagrees with bookkeeping");
    }
    const std::size_t total =
        std::accumulate(d.lengths.begin(), d.lengths.end() - 1, std::size_t{0});
    if (total != d.coeffs.size()) {
        throw Error(ErrorCode::InconsistentBookkeeping,
                    "bookkeeping accounts for " + std::to_string(total) +
                        " coefficients, vector holds " + std::to_string(d.coeffs.size()));
    }
    const std::size_t dyadic = 2 * d.lengths[levels];
    if (dyadic + d.tail.size() != d.lengths.back()) {
        throw Error(ErrorCode::InconsistentBookkeeping, "tail length disagrees with bookkeeping");
    }
    if (!d.wavelet.empty() && d.wavelet != w.name()) {
        throw Error(ErrorCode::InvalidWavelet,
                    "decomposition used '" + d.wavelet + "', not '" + w.name() + "'");
    }

    const std::span<const double> coeffs(d.coeffs);
    std::vector<double> approx(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(d.lengths[0]));
    std::size_t offset = d.lengths[0];
    for (std::size_t k = 1; k <= levels; ++k) {
        const auto detail = coeffs.subspan(offset, d.lengths[k]);
        approx = idwt_level(approx, detail, w, isa);
        offset += d.lengths[k];
    }
    approx.insert(approx.end(), d.tail.begin(), d.tail.end());
    return approx;
}

}  // namespace wstego
