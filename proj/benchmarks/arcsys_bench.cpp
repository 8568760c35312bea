#include <benchmark/benchmark.h>

#include "arcsys/classification.hpp"
#include "arcsys/enumeration.hpp"
#include "arcsys/intersection.hpp"

using namespace arcsys;

static void BM_IntersectAllPairs(benchmark::State& state) {
  auto u = arc_universe(ComplexityBound(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    long total = 0;
    for (const auto& x : u)
      for (const auto& y : u) total += intersect(x, y);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(u.size() * u.size()));
}
BENCHMARK(BM_IntersectAllPairs)->Arg(6)->Arg(12);

static void BM_OracleRow(benchmark::State& state) {
  auto u = arc_universe(ComplexityBound(6));
  for (auto _ : state) {
    long total = 0;
    for (const auto& y : u) total += oracle_intersect(u[17], y);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(u.size()));
}
BENCHMARK(BM_OracleRow);

static void BM_BuildGraph(benchmark::State& state) {
  auto u = arc_universe(ComplexityBound(6));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(u, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildGraph)->Arg(0)->Arg(1);

static void BM_MaximalCliques(benchmark::State& state) {
  auto g = build_graph(arc_universe(ComplexityBound(6)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  auto systems = find_systems(1, 6, 6).systems;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(systems[i]));
    i = (i + 1) % systems.size();
  }
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMicrosecond);

static void BM_FindSystems(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_systems(static_cast<int>(state.range(0)), 6, 12));
}
BENCHMARK(BM_FindSystems)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
