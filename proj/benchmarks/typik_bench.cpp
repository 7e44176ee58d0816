#include <benchmark/benchmark.h>

#include "typik/entailment.hpp"
#include "typik/kb_io.hpp"
#include "typik/phi.hpp"

namespace {

using namespace typik;

void BM_LogisticThresholds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_thresholds(PhiConfig::logistic(), n, 3));
}
BENCHMARK(BM_LogisticThresholds)->Arg(5)->Arg(50)->Arg(500);

void BM_ClampedThresholds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PhiConfig phi = PhiConfig::clamped_linear({1, 2}, {1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(compute_thresholds(phi, n, 3));
}
BENCHMARK(BM_ClampedThresholds)->Arg(5)->Arg(50)->Arg(500);

void BM_PhiNApply(benchmark::State& state) {
  const PhiN pn = compute_thresholds(PhiConfig::logistic(), 9, 3);
  std::int64_t w = -40000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_n_apply(pn, w));
    w = w > 40000 ? -40000 : w + 7;
  }
}
BENCHMARK(BM_PhiNApply);

WeightedKB penguin(int n) {
  WeightedKB kb = load_kb_file(TYPIK_FIXTURE_DIR "/penguin.json");
  kb.n = n;
  return kb;
}

void BM_EnumeratePenguin(benchmark::State& state) {
  const WeightedKB kb = penguin(static_cast<int>(state.range(0)));
  EnumerationOptions opts;
  opts.threads = 1;
  opts.strategy = state.range(1) ? EnumerationOptions::Strategy::kFeedforward : EnumerationOptions::Strategy::kSearch;
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_feasible(kb, opts).valuations.size();
  state.counters["feasible"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumeratePenguin)->ArgsProduct({{2, 5, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EntailPenguin(benchmark::State& state) {
  const WeightedKB kb = penguin(5);
  const TypicalityQuery q = parse_query("T(Penguin) -> !Fly >= 0.6");
  EnumerationOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(entails(kb, q, opts));
}
BENCHMARK(BM_EntailPenguin)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
