#include <benchmark/benchmark.h>

#include "lsq/canonical.hpp"
#include "lsq/cycles.hpp"
#include "lsq/sampler.hpp"

namespace {

void BM_canonical(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  lsq::LatinSquare L = lsq::jm_sample(n, 12345);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsq::canonical_labelling(L));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_canonical)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_cycle_table(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  lsq::LatinSquare L = lsq::jm_sample(n, 999);
  for (auto _ : state) {
    lsq::CycleTable table(L);
    benchmark::DoNotOptimize(table.r_max().size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_cycle_table)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_jm_step(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  lsq::JmChain chain(n, 7, {1, 1});
  lsq::LatinSquare L = chain.next();
  lsq::IncidenceCube cube(L);
  lsq::Rng rng(42);
  for (auto _ : state) {
    cube.step(rng);
  }
}
BENCHMARK(BM_jm_step)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
