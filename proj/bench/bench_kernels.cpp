// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "invext/forcing.hpp"
#include "invext/oracle.hpp"
#include "invext/scenarios.hpp"

using namespace invext;

namespace {

Scenario oracle_input(std::int64_t n) {
  return gen_random({static_cast<unsigned>(n), 2, 0.2, 17, true, true});
}

void BM_OracleSerial(benchmark::State& state) {
  const auto s = oracle_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_extensions(s, 8).extensions.size());
  state.counters["candidates"] = static_cast<double>(ordered_bell(static_cast<unsigned>(state.range(0))));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto s = oracle_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_extensions_parallel(s, 8).extensions.size());
  state.counters["candidates"] = static_cast<double>(ordered_bell(static_cast<unsigned>(state.range(0))));
}

void BM_ForcedSerial(benchmark::State& state) {
  const auto s = gen_two_track(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forced_set_exact(s, true).verdicts.size());
}

void BM_ForcedParallel(benchmark::State& state) {
  const auto s = gen_two_track(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forced_set_exact_parallel(s, true).verdicts.size());
}

void BM_Saturate(benchmark::State& state) {
  const auto s = gen_homothetic_grid(2, static_cast<int>(state.range(0)));
  auto st = seed(s);
  st.assert_strict(s.id_of("(2,1)"), s.id_of("(1,2)"));
  for (auto _ : state) benchmark::DoNotOptimize(saturate(st, s, true).weak.count());
}

}  // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForcedSerial)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForcedParallel)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
