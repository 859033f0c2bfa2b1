#include <benchmark/benchmark.h>

#include <numeric>

#include "twlayout/drawing.hpp"
#include "twlayout/generators.hpp"
#include "twlayout/ktree_track.hpp"
#include "twlayout/oracles.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_layout.hpp"

using namespace twlayout;

namespace {

Graph ktree(int n, int k, std::uint64_t seed = 1) {
  GeneratorParams p;
  p.n = n;
  p.k = k;
  p.seed = seed;
  return generate(Family::RandomKTree, p).graph;
}

void BM_KTreeTrackLayout(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ktree_track_layout(g, static_cast<int>(state.range(1))));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KTreeTrackLayout)->ArgsProduct({{1000, 10000, 100000}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_VerifyTrackLayout(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 2);
  const TrackLayout l = ktree_track_layout(g, 2).layout;
  for (auto _ : state) benchmark::DoNotOptimize(verify_track_layout(g, l));
}
BENCHMARK(BM_VerifyTrackLayout)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_MaxRainbow(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 3);
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_rainbow(g, order));
}
BENCHMARK(BM_MaxRainbow)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_VerifyDrawing(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 2);
  const Drawing3D d = draw_from_track(g, ktree_track_layout(g, 2).layout);
  for (auto _ : state) benchmark::DoNotOptimize(verify_drawing(g, d));
}
BENCHMARK(BM_VerifyDrawing)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExactQueueNumber(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_queue_number(g));
}
BENCHMARK(BM_ExactQueueNumber)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_ExactTrackNumber(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_track_number(g));
}
BENCHMARK(BM_ExactTrackNumber)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ExactPathwidth(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_pathwidth(g));
}
BENCHMARK(BM_ExactPathwidth)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_ExactTreewidth(benchmark::State& state) {
  const Graph g = ktree(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g));
}
BENCHMARK(BM_ExactTreewidth)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
