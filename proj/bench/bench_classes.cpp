// Serial exact-rational reference against the parallel scaled-integer kernel.
#include <benchmark/benchmark.h>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/equality.hpp"

namespace {

constexpr dedekind::i64 kPrime = 1000003;

void BM_ClassesSerial(benchmark::State& state) {
    const dedekind::i64 n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(dedekind::equality_classes_serial(n));
    state.SetItemsProcessed(state.iterations() * n);
}

void BM_ClassesParallel(benchmark::State& state) {
    const dedekind::i64 n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(dedekind::equality_classes(n));
    state.SetItemsProcessed(state.iterations() * n);
}

void BM_FastSum(benchmark::State& state) {
    dedekind::i64 m = 4943;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dedekind::dedekind_fast(m, kPrime));
        m = m % (kPrime - 2) + 1;
    }
}

void BM_ScaledSum(benchmark::State& state) {
    dedekind::i64 m = 4943;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dedekind::scaled_sum(m, kPrime));
        m = m % (kPrime - 2) + 1;
    }
}

}  // namespace

BENCHMARK(BM_ClassesSerial)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassesParallel)->Arg(10007)->Arg(100003)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastSum);
BENCHMARK(BM_ScaledSum);

BENCHMARK_MAIN();
