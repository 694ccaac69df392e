#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "prpd/prpd.hpp"

namespace {

const prpd::Graph& geometric_graph(std::size_t edges) {
  static std::map<std::size_t, prpd::Graph> cache;
  auto it = cache.find(edges);
  if (it == cache.end()) it = cache.emplace(edges, prpd::synthetic::random_geometric_graph_with_edges(edges, 7)).first;
  return it->second;
}

void BM_PageRank(benchmark::State& state) {
  const auto& g = geometric_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prpd::compute_pagerank(g));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.num_edges()));
}
BENCHMARK(BM_PageRank)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_Filtration(benchmark::State& state) {
  const auto& g = geometric_graph(static_cast<std::size_t>(state.range(0)));
  const auto pr = prpd::compute_pagerank(g);
  for (auto _ : state) benchmark::DoNotOptimize(prpd::lower_star_filtration(g, pr.scores));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.num_edges()));
}
BENCHMARK(BM_Filtration)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_UnionFindSweep(benchmark::State& state) {
  const auto& g = geometric_graph(static_cast<std::size_t>(state.range(0)));
  const auto pr = prpd::compute_pagerank(g);
  const auto filtration = prpd::lower_star_filtration(g, pr.scores);
  for (auto _ : state) benchmark::DoNotOptimize(prpd::compute_pd0(filtration, pr.scores));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.num_edges()));
}
BENCHMARK(BM_UnionFindSweep)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_Bottleneck(benchmark::State& state) {
  // Diagrams of two perturbed grid meshes of growing size.
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto grid = prpd::synthetic::grid_mesh(side, side);
  const auto a = prpd::descriptor(prpd::synthetic::mesh_graph(prpd::synthetic::perturb_mesh(grid, 0.1, 0.0, 1)));
  const auto b = prpd::descriptor(prpd::synthetic::mesh_graph(prpd::synthetic::perturb_mesh(grid, 0.1, 0.0, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(prpd::bottleneck(a, b));
  state.counters["points"] = static_cast<double>(a.finite_pairs().size() + b.finite_pairs().size());
}
BENCHMARK(BM_Bottleneck)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
