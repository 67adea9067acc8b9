#include <benchmark/benchmark.h>

#include "jmwg/characters.hpp"

namespace {

void BM_MurnaghanNakayamaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& classes = jmwg::partitions_of(n);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& lambda : classes) {
      for (const auto& mu : classes) acc += jmwg::mn_character(lambda, mu);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_MurnaghanNakayamaTable)->DenseRange(4, 12, 2);

void BM_CharToClass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  jmwg::CharacterExpansion f{n, std::vector<jmwg::Rational>(jmwg::partitions_of(n).size(), jmwg::Rational(1, 3))};
  jmwg::character_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(jmwg::char_to_class(f));
}
BENCHMARK(BM_CharToClass)->DenseRange(4, 10, 2);

}  // namespace
