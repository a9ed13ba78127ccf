// Microbenchmarks for the hot paths: single RANKING runs, blossom search,
// the per-edge aug3 scan, and full exhaustive sweeps at sweepable sizes.

#include <benchmark/benchmark.h>

#include "ranklab/blossom.hpp"
#include "ranklab/decomposition.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/ranking.hpp"
#include "ranklab/rng.hpp"

namespace {

using namespace ranklab;

void BM_RankingRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_random_planted(n, 0.3, 7);
  Rng rng(1234);
  std::vector<int> mate(inst.graph.n());
  Permutation perm = Permutation::identity(n);
  for (auto _ : state) {
    perm = Permutation::random(n, rng);
    mate.assign(n, -1);
    const int matched = ranking_fill(inst.graph, perm.order(),
                                     perm.positions(), mate);
    benchmark::DoNotOptimize(matched);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RankingRun)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_Blossom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_random_planted(n, 0.2, 11);
  for (auto _ : state) {
    const Matching m = maximum_matching(inst.graph);
    benchmark::DoNotOptimize(m.size());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Blossom)->Arg(32)->Arg(128)->Arg(512);

void BM_Aug3Count(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_random_planted(n, 0.25, 3);
  const Matching r = sample_ranking(inst.graph, 99).matching;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_aug3_by_edge_scan(r, inst.planted_opt));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Aug3Count)->Arg(64)->Arg(256)->Arg(1024);

void BM_ExhaustiveSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_random_planted(n, 0.3, 5);
  ExhaustiveOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const ExhaustiveStats stats =
        exhaustive_stats(inst.graph, inst.planted_opt, {1}, options);
    benchmark::DoNotOptimize(stats.sum_sizes);
  }
}
BENCHMARK(BM_ExhaustiveSweep)
    ->Args({6, 1})
    ->Args({8, 1})
    ->Args({8, 0})
    ->Args({10, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
