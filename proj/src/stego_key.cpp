// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include "wstego/stego_key.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "wstego/error.hpp"
#include "wstego/payload.hpp"

namespace wstego {

namespace {

constexpr std::string_view kMagic = "WSTEGO-KEY";
constexpr std::string_view kVersion = "v1";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// A whitespace-delimited token with its 1-based column.
struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t begin = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > begin) out.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return out;
}

std::optional<std::size_t> parse_unsigned(std::string_view s) {
    if (s.empty()) return std::nullopt;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

void check_subband_exists(Subband band, int levels) {
    if (!band.is_approximation() && (band.level < 1 || band.level > levels)) {
        throw Error(ErrorCode::BadLevelReference, "subband " + band.to_string() +
                                                      " does not exist with " +
                                                      std::to_string(levels) + " levels");
    }
}

struct EntryOrigin {
    std::size_t line;
};

}  // namespace

int step_of(char c) {
    if (c >= '0' && c <= '9') return c - '0' + 1;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 11;
    if (c >= 'a' && c <= 'z') return c - 'a' + 37;
    throw Error(ErrorCode::InvalidKeyCharacter,
                "password character code " + std::to_string(static_cast<unsigned char>(c)) +
                    " is not alphanumeric");
}

bool is_valid_password(std::string_view password) noexcept {
    if (password.empty()) return false;
    for (char c : password) {
        const bool alnum = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
        if (!alnum) return false;
    }
    return true;
}

void validate_key(const StegoKey& key) {
    if (key.version != kVersion) {
        throw Error(ErrorCode::KeySyntaxError, "unsupported key version '" + key.version + "'");
    }
    if (!is_builtin_wavelet(key.wavelet)) {
        throw Error(ErrorCode::UnknownWavelet, "unknown wavelet '" + key.wavelet + "'");
    }
    if (key.levels < 1 || key.levels > kMaxLevels) {
        throw Error(ErrorCode::BadLevelReference,
                    "levels must be within 1.." + std::to_string(kMaxLevels) + ", got " +
                        std::to_string(key.levels));
    }
    if (key.entries.empty()) throw Error(ErrorCode::KeySyntaxError, "key has no entries");
    for (std::size_t i = 0; i < key.entries.size(); ++i) {
        const auto& e = key.entries[i];
        check_subband_exists(e.subband, key.levels);
        if (e.password.empty()) throw Error(ErrorCode::InvalidKeyCharacter, "empty password");
        for (char c : e.password) step_of(c);
        for (std::size_t j = 0; j < i; ++j) {
            if (key.entries[j].subband == e.subband) {
                throw Error(ErrorCode::DuplicateSubband,
                            "subband " + e.subband.to_string() + " appears more than once");
            }
        }
    }
}

std::vector<std::size_t> entry_offsets(const KeyEntry& entry) {
    std::vector<std::size_t> out;
    out.reserve(entry.password.size() + 1);
    std::size_t pos = entry.start;
    out.push_back(pos);
    for (char c : entry.password) {
        pos += static_cast<std::size_t>(step_of(c));
        out.push_back(pos);
    }
    return out;
}

std::size_t total_slots(const StegoKey& key) noexcept {
    std::size_t slots = 0;
    for (const auto& e : key.entries) slots += e.password.size() + 1;
    return slots;
}

EmbeddingPlan plan_positions(const StegoKey& key, std::span<const std::size_t> lengths,
                             std::size_t chunks_needed) {
    validate_key(key);
    check_bookkeeping(lengths);
    if (lengths.size() - 2 != static_cast<std::size_t>(key.levels)) {
        throw Error(ErrorCode::InconsistentBookkeeping,
                    "key expects " + std::to_string(key.levels) + " levels, decomposition has " +
                        std::to_string(lengths.size() - 2));
    }

    std::vector<IndexRange> ranges;
    std::vector<std::vector<std::size_t>> offsets;
    for (const auto& e : key.entries) {
        const IndexRange r = subband_range(lengths, e.subband);
        auto out_of_band = [&](std::size_t offset) {
            return Error(ErrorCode::PositionOutOfSubband,
                         "entry " + e.subband.to_string() + " reaches offset " +
                             std::to_string(offset) + " but the subband holds " +
                             std::to_string(r.length) + " coefficients");
        };
        if (e.start >= r.length) throw out_of_band(e.start);
        auto local = entry_offsets(e);
        // offsets are increasing, so the last one is the farthest
        if (local.back() >= r.length) throw out_of_band(local.back());
        ranges.push_back(r);
        offsets.push_back(std::move(local));
    }

    const std::size_t slots = total_slots(key);
    if (chunks_needed > slots) {
        throw Error(ErrorCode::CapacityExceeded, std::to_string(chunks_needed) +
                                                     " chunks requested, key offers " +
                                                     std::to_string(slots) + " slots");
    }

    EmbeddingPlan plan;
    plan.positions.reserve(chunks_needed);
    std::size_t remaining = chunks_needed;
    for (std::size_t i = 0; i < key.entries.size(); ++i) {
        const std::size_t take = std::min(remaining, offsets[i].size());
        for (std::size_t k = 0; k < take; ++k) plan.positions.push_back(ranges[i].offset + offsets[i][k]);
        plan.per_entry_counts.push_back(take);
        remaining -= take;
    }
    return plan;
}

std::size_t capacity_bytes(const StegoKey& key, std::span<const std::size_t> lengths) {
    plan_positions(key, lengths, 0);
    const std::size_t slots = total_slots(key);
    return slots > kHeaderChunks ? slots - kHeaderChunks : 0;
}

StegoKey parse_key(std::string_view text) {
    StegoKey key;
    key.entries.clear();
    bool seen_magic = false;
    std::optional<std::size_t> wavelet_line;
    std::optional<std::size_t> levels_line;
    std::vector<EntryOrigin> origins;
    std::size_t line_no = 0;

    std::size_t cursor = 0;
    while (cursor <= text.size()) {
        const std::size_t nl = text.find('\n', cursor);
        std::string_view line = text.substr(cursor, nl == std::string_view::npos ? std::string_view::npos : nl - cursor);
        cursor = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!seen_magic) {
            if (tokens[0].text != kMagic) {
                throw KeySyntaxError(line_no, tokens[0].column, "expected 'WSTEGO-KEY v1' header");
            }
            if (tokens.size() < 2) throw KeySyntaxError(line_no, tokens[0].column + kMagic.size(), "missing version");
            if (tokens[1].text != kVersion) {
                throw KeySyntaxError(line_no, tokens[1].column,
                                     "unsupported version '" + std::string(tokens[1].text) + "'");
            }
            if (tokens.size() > 2) throw KeySyntaxError(line_no, tokens[2].column, "unexpected text");
            seen_magic = true;
            continue;
        }

        const std::string_view field = tokens[0].text;
        if (field == "wavelet:") {
            if (wavelet_line) throw KeySyntaxError(line_no, tokens[0].column, "duplicate wavelet line");
            if (tokens.size() != 2) {
                throw KeySyntaxError(line_no, tokens.size() < 2 ? tokens[0].column + field.size() : tokens[2].column,
                                     "expected exactly one wavelet name");
            }
            key.wavelet = std::string(tokens[1].text);
            wavelet_line = line_no;
        } else if (field == "levels:") {
            if (levels_line) throw KeySyntaxError(line_no, tokens[0].column, "duplicate levels line");
            if (tokens.size() != 2) {
                throw KeySyntaxError(line_no, tokens.size() < 2 ? tokens[0].column + field.size() : tokens[2].column,
                                     "expected exactly one level count");
            }
            const auto value = parse_unsigned(tokens[1].text);
            if (!value || *value < 1 || *value > static_cast<std::size_t>(kMaxLevels)) {
                throw KeySyntaxError(line_no, tokens[1].column,
                                     "level count must be an integer in 1.." + std::to_string(kMaxLevels));
            }
            key.levels = static_cast<int>(*value);
            levels_line = line_no;
        } else if (field == "entry:") {
            std::optional<Subband> band;
            std::optional<std::size_t> start;
            std::optional<std::string> password;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const auto& tok = tokens[t];
                const auto eq = tok.text.find('=');
                if (eq == std::string_view::npos) {
                    throw KeySyntaxError(line_no, tok.column, "expected name=value");
                }
                const auto name = tok.text.substr(0, eq);
                const auto value = tok.text.substr(eq + 1);
                const std::size_t value_col = tok.column + eq + 1;
                if (name == "level") {
                    if (band) throw KeySyntaxError(line_no, tok.column, "duplicate level field");
                    if (value == "A") {
                        band = Subband::approximation();
                    } else if (value.size() >= 2 && value[0] == 'D') {
                        const auto lvl = parse_unsigned(value.substr(1));
                        if (!lvl || *lvl > 1000) {
                            throw KeySyntaxError(line_no, value_col + 1, "bad detail level");
                        }
                        band = Subband::detail(static_cast<int>(*lvl));
                    } else {
                        throw KeySyntaxError(line_no, value_col, "level must be A or D<n>");
                    }
                } else if (name == "start") {
                    if (start) throw KeySyntaxError(line_no, tok.column, "duplicate start field");
                    start = parse_unsigned(value);
                    if (!start) throw KeySyntaxError(line_no, value_col, "start must be a non-negative integer");
                } else if (name == "password") {
                    if (password) throw KeySyntaxError(line_no, tok.column, "duplicate password field");
                    for (std::size_t c = 0; c < value.size(); ++c) {
                        if (!is_valid_password(value.substr(c, 1))) {
                            throw KeySyntaxError(line_no, value_col + c, "password must be alphanumeric");
                        }
                    }
                    if (value.empty()) throw KeySyntaxError(line_no, value_col, "empty password");
                    password = std::string(value);
                } else {
                    throw KeySyntaxError(line_no, tok.column, "unknown field '" + std::string(name) + "'");
                }
            }
            const std::size_t end_col = tokens.back().column + tokens.back().text.size();
            if (!band) throw KeySyntaxError(line_no, end_col, "entry is missing level=");
            if (!start) throw KeySyntaxError(line_no, end_col, "entry is missing start=");
            if (!password) throw KeySyntaxError(line_no, end_col, "entry is missing password=");
            key.entries.push_back({*band, *start, std::move(*password)});
            origins.push_back({line_no});
        } else {
            throw KeySyntaxError(line_no, tokens[0].column, "unknown line '" + std::string(field) + "'");
        }
    }

    if (!seen_magic) throw KeySyntaxError(1, 1, "empty key file");
    if (!wavelet_line) throw KeySyntaxError(line_no, 1, "missing wavelet line");
    if (!levels_line) throw KeySyntaxError(line_no, 1, "missing levels line");
    if (key.entries.empty()) throw KeySyntaxError(line_no, 1, "key has no entries");
    if (!is_builtin_wavelet(key.wavelet)) {
        throw Error(ErrorCode::UnknownWavelet, "line " + std::to_string(*wavelet_line) +
                                                   ": unknown wavelet '" + key.wavelet + "'");
    }
    for (std::size_t i = 0; i < key.entries.size(); ++i) {
        const auto& e = key.entries[i];
        if (!e.subband.is_approximation() && (e.subband.level < 1 || e.subband.level > key.levels)) {
            throw Error(ErrorCode::BadLevelReference,
                        "line " + std::to_string(origins[i].line) + ": subband " +
                            e.subband.to_string() + " does not exist with levels: " +
                            std::to_string(key.levels));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (key.entries[j].subband == e.subband) {
                throw Error(ErrorCode::DuplicateSubband,
                            "line " + std::to_string(origins[i].line) + ": subband " +
                                e.subband.to_string() + " already used on line " +
                                std::to_string(origins[j].line));
            }
        }
    }
    return key;
}

std::string serialize_key(const StegoKey& key) {
    std::ostringstream out;
    out << kMagic << ' ' << key.version << '\n';
    out << "wavelet: " << key.wavelet << '\n';
    out << "levels: " << key.levels << '\n';
    for (const auto& e : key.entries) {
        out << "entry: level=" << e.subband.to_string() << " start=" << e.start
            << " password=" << e.password << '\n';
    }
    return out.str();
}

}  // namespace wstego
