#include <benchmark/benchmark.h>

#include <hypercover/graphs.hpp>
#include <hypercover/linalg.hpp>
#include <hypercover/pointset.hpp>
#include <hypercover/sensing.hpp>

using namespace hypercover;

static void BM_CoveringNumberSn(benchmark::State& state) {
  PointSet s = build_sn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = covering_number(s);
    benchmark::DoNotOptimize(r.first);
  }
}
BENCHMARK(BM_CoveringNumberSn)->DenseRange(2, 6);

static void BM_Girth(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  BipartiteGraph g = complete_bipartite(n, n);
  for (auto _ : state) {
    auto r = girth(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Girth)->DenseRange(4, 12, 4);

static void BM_GreedyGirthGraph(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    BipartiteGraph g = greedy_girth_graph(n, n, 6, EdgeOrder::left_major);
    benchmark::DoNotOptimize(g.edges().size());
  }
}
BENCHMARK(BM_GreedyGirthGraph)->DenseRange(4, 16, 4);

static void BM_VerifySensing(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto built = build_corollary_matrix(n, 2);
  for (auto _ : state) {
    auto rep = verify_sensing(built.first, 2, kDefaultBudget);
    benchmark::DoNotOptimize(rep.verified);
  }
}
BENCHMARK(BM_VerifySensing)->DenseRange(4, 8, 2);

static void BM_RankExact(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  Int v = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = (v * Int(7919)) % 13 - 6;
      v += 1;
    }
  for (auto _ : state) {
    auto r = rank_exact(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RankExact)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
