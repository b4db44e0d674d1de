#include "qchain/fristedt.hpp"
#include "qchain/glchain.hpp"

#include <benchmark/benchmark.h>

using namespace qchain;

namespace {
const MeasureParams kParams(make_rational(2), make_rational(1, 2));
}

static void BM_KernelMatrix(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_matrix(static_cast<int>(state.range(0)), kParams));
    }
}
BENCHMARK(BM_KernelMatrix)->Arg(20)->Arg(40);

static void BM_Diagonalization(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_diagonalization(static_cast<int>(state.range(0)), kParams));
    }
}
BENCHMARK(BM_Diagonalization)->Arg(29);

static void BM_MatrixPower(benchmark::State& state) {
    const auto k = kernel_matrix(20, kParams);
    for (auto _ : state) {
        benchmark::DoNotOptimize(k.power(static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_MatrixPower)->Arg(2)->Arg(8);

static void BM_KrClosed(benchmark::State& state) {
    const int big_l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kr_closed(big_l, 1, 8, kParams));
    }
}
BENCHMARK(BM_KrClosed)->Arg(20)->Arg(60);

static void BM_GlSample(benchmark::State& state) {
    const GlSampler sampler(kParams);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(derive_seed(1, i++)));
    }
}
BENCHMARK(BM_GlSample);

static void BM_FristedtSample(benchmark::State& state) {
    const FristedtSampler sampler(FristedtParams(make_rational(1, 2)));
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(derive_seed(2, i++)));
    }
}
BENCHMARK(BM_FristedtSample);
