#include <benchmark/benchmark.h>

#include "fusionkit/control.hpp"
#include "fusionkit/corpus.hpp"
#include "fusionkit/critical.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/suite.hpp"

using namespace fusionkit;

static void BM_BuildAgl(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_agl_family(p, n).g.order());
}
BENCHMARK(BM_BuildAgl)->Args({3, 2})->Args({2, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_HyperfocalBothWays(benchmark::State& state) {
  const AglFamily f = build_agl_family(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyperfocal_fusion(f.g, f.s, 3).order());
    benchmark::DoNotOptimize(hyperfocal_puig(f.g, f.s, 3).order());
  }
}
BENCHMARK(BM_HyperfocalBothWays)->Unit(benchmark::kMillisecond);

static void BM_FusionEqualAgl(benchmark::State& state) {
  const AglFamily f = build_agl_family(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_equal(f.g, f.h, f.s, f.p).equal);
}
BENCHMARK(BM_FusionEqualAgl)->Args({3, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_Thm1Agl(benchmark::State& state) {
  const AglFamily f = build_agl_family(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(thm1_validate(f.g, f.h, f.s, 3).implication_ok);
}
BENCHMARK(BM_Thm1Agl)->Unit(benchmark::kMillisecond);

static void BM_ThompsonSl23(benchmark::State& state) {
  const Sl23 sl = build_sl23();
  for (auto _ : state) benchmark::DoNotOptimize(find_thompson_d(automizer_setup(sl.g, sl.s, 2)).d.order());
}
BENCHMARK(BM_ThompsonSl23)->Unit(benchmark::kMillisecond);

static void BM_CorpusSuite(benchmark::State& state) {
  std::vector<LoadedEntry> corpus;
  for (auto& e : builtin_corpus()) corpus.push_back(load_entry(std::move(e)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(corpus).ok());
}
BENCHMARK(BM_CorpusSuite)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
