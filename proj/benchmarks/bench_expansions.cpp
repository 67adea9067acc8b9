#include <benchmark/benchmark.h>

#include "jmwg/group_algebra.hpp"
#include "jmwg/jm_expansion.hpp"
#include "jmwg/weingarten.hpp"

namespace {

void BM_HClassExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  jmwg::character_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::h_class_expansion(n, r));
}
BENCHMARK(BM_HClassExpansion)->Args({4, 12})->Args({8, 12})->Args({10, 12});

void BM_WgRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const jmwg::Partition mu = jmwg::Partition::row(n);
  jmwg::character_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::wg_rational(n, mu));
}
BENCHMARK(BM_WgRational)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_HDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::h_direct(n, r));
}
BENCHMARK(BM_HDirect)->Args({4, 4})->Args({5, 5})->Args({6, 6})->Unit(benchmark::kMillisecond);

}  // namespace
