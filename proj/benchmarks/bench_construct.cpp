#include <benchmark/benchmark.h>

#include "dpham/dpham.hpp"

namespace {

using dpham::Index;

void BM_HamiltonCycle(benchmark::State& state) {
  const Index n = state.range(0);
  const Index t = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(dpham::hamilton_cycle(n, t));
  state.SetItemsProcessed(state.iterations() * 4 * n);
}
// Even ladder, odd with g = 1, odd with large g.
BENCHMARK(BM_HamiltonCycle)
    ->Args({1000, 7})
    ->Args({999, 7})
    ->Args({999, 333})
    ->Args({10001, 4999});

void BM_Verify(benchmark::State& state) {
  const Index n = state.range(0);
  const Index t = state.range(1);
  const dpham::DpGraph g(dpham::make_params(n, t));
  const auto cycle = dpham::hamilton_cycle(n, t);
  for (auto _ : state) benchmark::DoNotOptimize(dpham::verify_hamilton(g, cycle.vertices()));
  state.SetItemsProcessed(state.iterations() * 4 * n);
}
BENCHMARK(BM_Verify)->Args({1000, 7})->Args({999, 333});

void BM_ProofPartitions(benchmark::State& state) {
  const Index n = state.range(0);
  const Index t = state.range(1);
  const dpham::DpGraph g(dpham::make_params(n, t));
  const auto a = dpham::canonical_a_sequence(g.params());
  for (auto _ : state) benchmark::DoNotOptimize(dpham::check_proof_partitions(g, a));
}
BENCHMARK(BM_ProofPartitions)->Args({201, 3})->Args({201, 67});

void BM_SweepSmallRange(benchmark::State& state) {
  dpham::SweepSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(dpham::run_sweep(spec));
}
BENCHMARK(BM_SweepSmallRange)->Unit(benchmark::kMillisecond);

}  // namespace
