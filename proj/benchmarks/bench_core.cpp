#include <benchmark/benchmark.h>

#include "apery/exact.hpp"
#include "apery/formulas.hpp"
#include "apery/oracle.hpp"

using namespace apery;

static void BM_MhsExact(benchmark::State& state) {
  SignedWord w{{2, 1}, {1, -1}, {1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(mhs(static_cast<int>(state.range(0)), w));
}
BENCHMARK(BM_MhsExact)->Arg(100)->Arg(500);

static void BM_ZetaStarOnes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta_star_ones(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_ZetaStarOnes)->Arg(50)->Arg(200);

static void BM_StirlingCycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stirling_cycle(30, 12));
}
BENCHMARK(BM_StirlingCycle);

static void BM_EvalWordDepth4(benchmark::State& state) {
  Atom a = Atom::alt({{2, 1}, {1, -1}, {1, 1}, {1, -1}});
  for (auto _ : state) {
    clear_eval_cache();
    benchmark::DoNotOptimize(eval_atom(a));
  }
}
BENCHMARK(BM_EvalWordDepth4)->Unit(benchmark::kMillisecond);

static void BM_EvalCached(benchmark::State& state) {
  Atom a = Atom::alt({{2, 1}, {1, -1}, {1, 1}, {1, -1}});
  eval_atom(a);
  for (auto _ : state) benchmark::DoNotOptimize(eval_atom(a));
}
BENCHMARK(BM_EvalCached);

static void BM_FormulaAssembly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(formula_tT1(4).expanded.size());
}
BENCHMARK(BM_FormulaAssembly)->Unit(benchmark::kMillisecond);

static void BM_OracleSum(benchmark::State& state) {
  SeriesId id{Family::S, {1, 2}, 0, 1};
  OracleOptions opts;
  opts.n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sum_series(id, opts).value.value);
}
BENCHMARK(BM_OracleSum)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
