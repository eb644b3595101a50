// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"
#include "wstego/kernels.hpp"

namespace wstego::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(WSTEGO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void require(Isa isa) {
    if (!isa_available(isa)) {
        throw std::logic_error("kernel variant '" + std::string(isa_name(isa)) +
                               "' is not available on this build or CPU");
    }
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2: return cpu_has_avx2();
    }
    return false;
}

Isa best_isa() noexcept {
    static const Isa selected = [] {
        const char* forced = std::getenv("WSTEGO_ISA");
        if (forced != nullptr && std::string_view(forced) == "scalar") return Isa::Scalar;
        return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return selected;
}

void analyze(Isa isa, std::span<const double> x, std::span<const double> lo,
             std::span<const double> hi, std::span<double> approx, std::span<double> detail) {
    assert(x.size() % 2 == 0 && approx.size() == x.size() / 2 && detail.size() == approx.size());
    assert(lo.size() == hi.size() && lo.size() % 2 == 0);
    require(isa);
    switch (isa) {
        case Isa::Scalar:
            scalar::analyze(x.data(), x.size(), lo.data(), hi.data(), lo.size(), approx.data(),
                            detail.data());
            return;
        case Isa::Avx2:
#if defined(WSTEGO_HAVE_AVX2)
            avx2::analyze(x.data(), x.size(), lo.data(), hi.data(), lo.size(), approx.data(),
                          detail.data());
#endif
            return;
    }
}

void synthesize(Isa isa, std::span<const double> approx, std::span<const double> detail,
                std::span<const double> lo, std::span<const double> hi, std::span<double> out) {
    assert(approx.size() == detail.size() && out.size() == 2 * approx.size());
    assert(lo.size() == hi.size() && lo.size() % 2 == 0);
    require(isa);
    switch (isa) {
        case Isa::Scalar:
            scalar::synthesize(approx.data(), detail.data(), approx.size(), lo.data(), hi.data(),
                               lo.size(), out.data());
            return;
        case Isa::Avx2:
#if defined(WSTEGO_HAVE_AVX2)
            avx2::synthesize(approx.data(), detail.data(), approx.size(), lo.data(), hi.data(),
                             lo.size(), out.data());
#endif
            return;
    }
}

}  // namespace wstego::kernels
