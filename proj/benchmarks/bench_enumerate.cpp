#include <benchmark/benchmark.h>

#include <census/chromatic.hpp>
#include <census/enumerate.hpp>

using namespace census;

namespace {

void BM_StrongTournaments(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_tournaments(n, TournamentFilter::strong, {1, true}));
  }
}
BENCHMARK(BM_StrongTournaments)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Digraphs(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto filter = static_cast<DigraphFilter>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_digraphs(n, filter));
}
BENCHMARK(BM_Digraphs)
    ->ArgsProduct({{4, 5}, {static_cast<long>(DigraphFilter::strong),
                            static_cast<long>(DigraphFilter::acyclic)}})
    ->Unit(benchmark::kMillisecond);

void BM_Trees(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_Trees)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Reciprocity(benchmark::State& state) {
  auto g = UndirectedGraph::from_mask(static_cast<int>(state.range(0)), 0xFFFFU);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_check(g));
}
BENCHMARK(BM_Reciprocity)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
