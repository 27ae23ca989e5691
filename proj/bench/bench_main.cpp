// Serial reference vs OpenMP kernels on representative inputs.

#include <benchmark/benchmark.h>

#include "egt/cover.hpp"
#include "egt/cuts.hpp"
#include "egt/graph.hpp"
#include "egt/group.hpp"
#include "egt/kernel.hpp"
#include "egt/metric.hpp"

namespace {

egt::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? egt::Exec::kParallel : egt::Exec::kSerial;
}

void BM_BfsMetric(benchmark::State& state) {
  egt::Graph g = egt::make_torus(40, 40);
  for (auto _ : state)
    benchmark::DoNotOptimize(egt::bfs_metric(g, exec_of(state)));
}
BENCHMARK(BM_BfsMetric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheegerExact(benchmark::State& state) {
  egt::Graph g = egt::make_torus(4, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(egt::cheeger_exact(g, {}, exec_of(state)));
}
BENCHMARK(BM_CheegerExact)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExpanderConstant(benchmark::State& state) {
  egt::Graph g = egt::make_torus(4, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(egt::expander_constant(g, {}, exec_of(state)));
}
BENCHMARK(BM_ExpanderConstant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FolnerGreedy(benchmark::State& state) {
  egt::Graph g = egt::make_torus(12, 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        egt::folner_ratio(g, 72, egt::FolnerMode::kGreedy, {}, exec_of(state)));
}
BENCHMARK(BM_FolnerGreedy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuasiTriangle(benchmark::State& state) {
  egt::Graph cay =
      egt::cayley_graph(egt::FiniteGroup::enumerate(egt::sl_generators(2, 5)))
          .graph;
  egt::Kernel k = egt::kernel_from_metric(cay, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(egt::quasi_triangle_check(k, exec_of(state)));
}
BENCHMARK(BM_QuasiTriangle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DeckGroup(benchmark::State& state) {
  egt::ReductionCover rc = egt::quotient_cover_from_reduction(2, 9, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(egt::deck_group(rc.cover, exec_of(state)));
}
BENCHMARK(BM_DeckGroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
