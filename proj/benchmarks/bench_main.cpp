#include <benchmark/benchmark.h>
#include "zf/zetafn.hpp"

static void BM_Zeta(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(zf::zeta({0.75, 14.0}));
  }
}
BENCHMARK(BM_Zeta);
BENCHMARK_MAIN();
