// Serial reference vs OpenMP kernels. Run: build/bench/kce_bench

#include "kce/batch.hpp"
#include "kce/zeta.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_TableSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kce::build_table_serial(5, state.range(0)));
}

void BM_TableParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kce::build_table(5, state.range(0)));
}

void BM_DatasheetsSerial(benchmark::State& state) {
    const auto Ds = kce::admissible_discriminants(5, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kce::datasheets_serial(Ds));
}

void BM_DatasheetsParallel(benchmark::State& state) {
    const auto Ds = kce::admissible_discriminants(5, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kce::datasheets(Ds));
}

void BM_GaussSumSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kce::gauss_sum_numeric_serial(state.range(0), 50));
}

void BM_GaussSumParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kce::gauss_sum_numeric(state.range(0), 50));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DatasheetsSerial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DatasheetsParallel)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussSumSerial)->Arg(997)->Arg(9973)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussSumParallel)->Arg(997)->Arg(9973)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
