// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wstego/dwt.hpp"
#include "wstego/kernels.hpp"

namespace {

using wstego::kernels::Isa;

std::vector<double> noise(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = d(rng);
    return x;
}

void BM_Wavedec(benchmark::State& state, Isa isa, const char* wavelet) {
    if (!wstego::kernels::isa_available(isa)) {
        state.SkipWithError("kernel variant not available");
        return;
    }
    const auto x = noise(static_cast<std::size_t>(state.range(0)));
    const auto& w = wstego::builtin_wavelet(wavelet);
    for (auto _ : state) {
        auto d = wstego::wavedec(x, w, 6, isa);
        benchmark::DoNotOptimize(d.coeffs.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Waverec(benchmark::State& state, Isa isa, const char* wavelet) {
    if (!wstego::kernels::isa_available(isa)) {
        state.SkipWithError("kernel variant not available");
        return;
    }
    const auto& w = wstego::builtin_wavelet(wavelet);
    const auto d = wstego::wavedec(noise(static_cast<std::size_t>(state.range(0))), w, 6);
    for (auto _ : state) {
        auto x = wstego::waverec(d, w, isa);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Wavedec, scalar_db4, Isa::Scalar, "db4")->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_Wavedec, avx2_db4, Isa::Avx2, "db4")->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_Waverec, scalar_db4, Isa::Scalar, "db4")->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_Waverec, avx2_db4, Isa::Avx2, "db4")->Range(1 << 12, 1 << 20);

BENCHMARK_MAIN();
