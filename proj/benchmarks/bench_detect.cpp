#include <benchmark/benchmark.h>

#include "cascode/benchgen.hpp"
#include "cascode/detect.hpp"
#include "cascode/greedy.hpp"

namespace {

void bm_detect_karate(benchmark::State& state) {
  const cascode::Graph g = cascode::karate_club();
  for (auto _ : state) {
    auto result = cascode::detect(g, 0);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_detect_karate);

void bm_detect_gn(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto net = cascode::gn_benchmark(
      k, 20, 0.3, cascode::default_gn_p_out(k, 20), 7);
  for (auto _ : state) {
    auto result = cascode::detect(net.graph, 0);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(net.graph.node_count());
}
BENCHMARK(bm_detect_gn)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Complexity();

void bm_greedy_karate(benchmark::State& state) {
  const cascode::Graph g = cascode::karate_club();
  for (auto _ : state) {
    auto partition = cascode::greedy_modularity_partition(g);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(bm_greedy_karate);

void bm_greedy_gn(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto net = cascode::gn_benchmark(
      k, 20, 0.3, cascode::default_gn_p_out(k, 20), 7);
  for (auto _ : state) {
    auto partition = cascode::greedy_modularity_partition(net.graph);
    benchmark::DoNotOptimize(partition);
  }
  state.SetComplexityN(net.graph.node_count());
}
BENCHMARK(bm_greedy_gn)->Arg(5)->Arg(10)->Arg(20)->Complexity();

}  // namespace

BENCHMARK_MAIN();
