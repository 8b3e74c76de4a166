#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "tvg/algebra.hpp"
#include "tvg/analysis.hpp"
#include "tvg/convert.hpp"
#include "tvg/io.hpp"

namespace {

tvg::Tvg random_graph(std::size_t nodes, std::size_t times, std::size_t edges) {
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < times; ++t) labels.push_back("t" + std::to_string(t));
  tvg::Tvg g(nodes, labels);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint32_t> node(0, static_cast<std::uint32_t>(nodes - 1));
  std::uniform_int_distribution<std::uint32_t> time(0, static_cast<std::uint32_t>(times - 1));
  while (g.edge_count() < edges) {
    const tvg::DynamicEdge e{tvg::NodeId{node(rng)}, tvg::TimeId{time(rng)},
                             tvg::NodeId{node(rng)}, tvg::TimeId{time(rng)}};
    if (e.origin() == e.destination()) continue;  // no self-loops
    g.try_add_edge(e);
  }
  return g;
}

void BM_AdjacencyMatrix(benchmark::State& state) {
  const auto g = random_graph(1000, 100, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tvg::adjacency_matrix(g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AdjacencyMatrix)->RangeMultiplier(10)->Range(1000, 100000);

void BM_IncidenceMatrix(benchmark::State& state) {
  const auto g = random_graph(1000, 100, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tvg::incidence_matrix(g));
}
BENCHMARK(BM_IncidenceMatrix)->RangeMultiplier(10)->Range(1000, 100000);

void BM_Reachable(benchmark::State& state) {
  const auto g = random_graph(1000, 100, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tvg::reachable(g, {tvg::NodeId{0}, tvg::TimeId{0}}));
  }
}
BENCHMARK(BM_Reachable)->RangeMultiplier(10)->Range(1000, 100000);

void BM_IsCyclic(benchmark::State& state) {
  const auto g = random_graph(1000, 100, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tvg::is_cyclic(g));
}
BENCHMARK(BM_IsCyclic)->RangeMultiplier(10)->Range(1000, 100000);

void BM_WriteReadTvg(benchmark::State& state) {
  const auto g = random_graph(1000, 100, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::stringstream buffer;
    tvg::write_tvg(g, buffer);
    benchmark::DoNotOptimize(tvg::read_tvg(buffer));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WriteReadTvg)->RangeMultiplier(10)->Range(1000, 100000);

void BM_FromCtiSpatialTemporal(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> node(0, 99);
  std::uniform_int_distribution<int> instant(0, 10000);
  std::vector<tvg::CtiInterval> intervals;
  while (intervals.size() < static_cast<std::size_t>(state.range(0))) {
    const tvg::NodeId u{node(rng)}, v{node(rng)};
    int a = instant(rng), b = instant(rng);
    if (u == v || a == b) continue;
    if (a > b) std::swap(a, b);
    intervals.push_back({u, v, double(a), double(b)});
  }
  tvg::CtiOptions options;
  options.mode = tvg::CtiMode::SpatialTemporal;
  for (auto _ : state) benchmark::DoNotOptimize(tvg::from_cti(intervals, options));
}
BENCHMARK(BM_FromCtiSpatialTemporal)->Arg(10)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
