#include <benchmark/benchmark.h>

#include "jmwg/haar_mc.hpp"

namespace {

void BM_SampleHaar(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  jmwg::StreamRng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::sample_haar_unitary(d, rng));
}
BENCHMARK(BM_SampleHaar)->DenseRange(1, 8);

void BM_MomentMc(benchmark::State& state) {
  jmwg::MomentSpec spec{2, 3, {1, 1}, {1, 2}, {1, 1}, {1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::moment_mc(spec, 10000, 42, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MomentMc)->Unit(benchmark::kMillisecond);

}  // namespace
