#include <quadmaps/bijection.hpp>
#include <quadmaps/continuum.hpp>
#include <quadmaps/gf_discrete.hpp>
#include <quadmaps/sampler.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace quadmaps;

namespace {

void BM_DiskSeries(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_series(5, order));
}
BENCHMARK(BM_DiskSeries)->Arg(16)->Arg(24)->Arg(32);

void BM_ThreePointSeries(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  DistanceTriple d{3, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(g_three(d, order));
}
BENCHMARK(BM_ThreePointSeries)->Arg(12)->Arg(20);

void BM_SampleTree(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_labeled_tree(n, rng));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleTree)->Arg(1000)->Arg(16384)->Arg(100000);

void BM_SampleQuadrangulation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_pointed_quadrangulation(n, seed++));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleQuadrangulation)->Arg(1000)->Arg(16384);

void BM_ForwardInverse(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PointedQuadrangulation pq = sample_pointed_quadrangulation(n, 7);
  for (auto _ : state) {
    ForwardResult fwd = forward_bijection(pq);
    benchmark::DoNotOptimize(inverse_bijection(fwd.labeled));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ForwardInverse)->Arg(1000)->Arg(16384);

void BM_Bfs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PointedQuadrangulation pq = sample_pointed_quadrangulation(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distances(pq.map, pq.sources[0]));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Bfs)->Arg(16384)->Arg(100000);

void BM_Rho2(benchmark::State& state) {
  ScalingEval ev;
  double d = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.rho2(d));
    d = d < 4.0 ? d + 0.25 : 0.5;
  }
}
BENCHMARK(BM_Rho2);

void BM_Rho3(benchmark::State& state) {
  ScalingEval ev;
  for (auto _ : state) benchmark::DoNotOptimize(ev.rho3(1.2, 1.0, 0.8));
}
BENCHMARK(BM_Rho3);

}  // namespace

BENCHMARK_MAIN();
