#include "qchain/identities.hpp"
#include "qchain/theta.hpp"

#include <benchmark/benchmark.h>

using namespace qchain;

static void BM_AgSum(benchmark::State& state) {
    const AGSpec spec{static_cast<int>(state.range(0)), 1, static_cast<std::size_t>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ag_sum(spec));
    }
}
BENCHMARK(BM_AgSum)->Args({2, 60})->Args({2, 200})->Args({5, 60})->Args({5, 120});

static void BM_AgProduct(benchmark::State& state) {
    const AGSpec spec{3, 2, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ag_product(spec));
    }
}
BENCHMARK(BM_AgProduct)->Arg(60)->Arg(200)->Arg(500);

static void BM_SeriesInverse(benchmark::State& state) {
    const QSeries e = euler_product(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.inverse());
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(100)->Arg(400);

static void BM_AbsorptionLimit(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(absorption_limit_series(3, 0, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_AbsorptionLimit)->Arg(60)->Arg(200);

static void BM_JacobiProduct(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_product(1, 5, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_JacobiProduct)->Arg(200)->Arg(1000);
