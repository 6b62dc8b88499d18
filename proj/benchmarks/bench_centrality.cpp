#include <benchmark/benchmark.h>

#include "cascode/benchgen.hpp"
#include "cascode/centrality.hpp"

namespace {

void bm_betweenness_karate(benchmark::State& state) {
  const cascode::Graph g = cascode::karate_club();
  for (auto _ : state) {
    auto scores = cascode::betweenness(g);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(bm_betweenness_karate);

void bm_betweenness_gn(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto net = cascode::gn_benchmark(
      k, 20, 0.3, cascode::default_gn_p_out(k, 20), 7);
  for (auto _ : state) {
    auto scores = cascode::betweenness(net.graph);
    benchmark::DoNotOptimize(scores);
  }
  state.SetComplexityN(net.graph.node_count());
}
BENCHMARK(bm_betweenness_gn)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Complexity();

}  // namespace
