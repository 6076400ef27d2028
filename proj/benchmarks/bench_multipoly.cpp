#include <benchmark/benchmark.h>

#include <census/binomial_tables.hpp>
#include <census/multipoly.hpp>

using namespace census;

namespace {

MultiPoly dense_uy(long degree) {
  MultiPoly u = MultiPoly::variable(Var::u);
  MultiPoly y = MultiPoly::variable(Var::y);
  return pow(MultiPoly(1L) + u * y + y, static_cast<unsigned>(degree));
}

void BM_Multiply(benchmark::State& state) {
  MultiPoly a = dense_uy(state.range(0));
  MultiPoly b = dense_uy(state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size());
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(4, 32);

void BM_ExactDivide(benchmark::State& state) {
  MultiPoly b = dense_uy(state.range(0));
  MultiPoly a = b * dense_uy(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(try_exact_divide(a, b));
}
BENCHMARK(BM_ExactDivide)->Arg(4)->Arg(8)->Arg(16);

void BM_Substitute(benchmark::State& state) {
  MultiPoly p = dense_uy(state.range(0));
  Bindings at{{Var::u, MultiPoly(1L)}};
  for (auto _ : state) benchmark::DoNotOptimize(substitute(p, at));
}
BENCHMARK(BM_Substitute)->Arg(8)->Arg(32);

// Rows below the binomial memo bound are cache hits.
void BM_GaussianBinomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(n, n / 2));
}
BENCHMARK(BM_GaussianBinomial)->Arg(8)->Arg(16)->Arg(24);

}  // namespace
