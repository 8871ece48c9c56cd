#include <benchmark/benchmark.h>

#include "revwiener/enumeration.hpp"
#include "revwiener/families.hpp"
#include "revwiener/invariants.hpp"

namespace {

using namespace revwiener;

void BM_FreeTreeGeneration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t trees = 0;
  for (auto _ : state) {
    FreeTreeGenerator gen(n);
    while (gen.next()) benchmark::DoNotOptimize(gen.level_sequence().data());
    trees = count_free_trees(n);
  }
  state.counters["trees"] = double(trees);
  state.SetItemsProcessed(state.iterations() * std::int64_t(trees));
}
BENCHMARK(BM_FreeTreeGeneration)->Arg(12)->Arg(16)->Arg(18);

void BM_WienerEdgeCut(benchmark::State& state) {
  const Tree t = path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wiener_edge_cut(t));
}
BENCHMARK(BM_WienerEdgeCut)->Arg(100)->Arg(1000)->Arg(10000);

void BM_WienerBfs(benchmark::State& state) {
  const Tree t = path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wiener_bfs(t));
}
BENCHMARK(BM_WienerBfs)->Arg(100)->Arg(1000);

void BM_CanonicalCode(benchmark::State& state) {
  const Tree t = diam4(Diam4Spec{2, {{3, 4}, {4, 3}}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(BM_CanonicalCode);

void BM_Diam4Enumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_class_extremes(n, 4));
  state.counters["classes"] = double(count_diam4_specs(n));
}
BENCHMARK(BM_Diam4Enumeration)->Arg(40)->Arg(57)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_RankTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_trees(n, 3));
}
BENCHMARK(BM_RankTrees)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
