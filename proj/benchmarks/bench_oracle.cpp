#include <benchmark/benchmark.h>

#include "dpham/dpham.hpp"

namespace {

void BM_BruteForce(benchmark::State& state) {
  const dpham::DpGraph g(dpham::make_params(state.range(0), state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dpham::brute_force_hamilton(g));
}
BENCHMARK(BM_BruteForce)->Args({5, 2})->Args({9, 4})->Args({12, 5})->Unit(benchmark::kMicrosecond);

}  // namespace
