#include <benchmark/benchmark.h>

#include <census/families.hpp>
#include <census/series.hpp>

using namespace census;

namespace {

// Strong digraphs through the log transform; nothing on this path is memoized.
void BM_StrongDigraphSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(strong_digraphs_series(order));
}
BENCHMARK(BM_StrongDigraphSeries)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_AcyclicSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(acyclic_series(order));
}
BENCHMARK(BM_AcyclicSeries)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_TreeRevert(benchmark::State& state) {
  auto inverse = tree_inverse_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(revert(inverse));
}
BENCHMARK(BM_TreeRevert)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_ExpLog(benchmark::State& state) {
  auto trees = tree_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log(exp(trees)));
}
BENCHMARK(BM_ExpLog)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
