#include <benchmark/benchmark.h>

#include "seqcheck/combinatorics.hpp"
#include "seqcheck/power_series.hpp"
#include "seqcheck/sequence_engine.hpp"

using namespace seqcheck;

static void BM_Recurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a_recurrence(state.range(0)));
}
BENCHMARK(BM_Recurrence)->Arg(200)->Arg(1000);

static void BM_Method(benchmark::State& state) {
  const auto method = static_cast<MethodId>(state.range(0));
  state.SetLabel(std::string(to_string(method)));
  const std::int64_t n = method == MethodId::Egf ? 64 : 200;
  for (auto _ : state) benchmark::DoNotOptimize(compute_sequence(method, n));
}
BENCHMARK(BM_Method)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_GenocchiEgf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genocchi_egf_recurrence(state.range(0)));
}
BENCHMARK(BM_GenocchiEgf)->Arg(60)->Arg(200);

static void BM_GenocchiSeidel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genocchi_seidel(state.range(0)));
}
BENCHMARK(BM_GenocchiSeidel)->Arg(60)->Arg(200);

static void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = series_g(n);
  const auto h = series_h(n);
  for (auto _ : state) benchmark::DoNotOptimize(ps_compose(g, h));
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ValuationScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(valuation_scan(Integer(2), state.range(0)));
}
BENCHMARK(BM_ValuationScan)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CrossVerify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_verify(200, 64));
}
BENCHMARK(BM_CrossVerify)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
