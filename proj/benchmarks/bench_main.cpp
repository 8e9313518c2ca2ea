#include <benchmark/benchmark.h>

#include "kpbound/bounds.hpp"
#include "kpbound/conformal.hpp"
#include "kpbound/extremal_disk.hpp"

using namespace kp;

static void BM_MainBound(benchmark::State& state) {
  RadiiTriple t{0.6, 0.5, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(main_bound(t));
}
BENCHMARK(BM_MainBound);

static void BM_StadiumDistanceToBoundary(benchmark::State& state) {
  Stadium s({{0, 0}, 2}, {{2, 0}, 1});
  for (auto _ : state) benchmark::DoNotOptimize(s.distance_to_boundary({0.7, 0.2}));
}
BENCHMARK(BM_StadiumDistanceToBoundary);

static void BM_ExtremalDisk(benchmark::State& state) {
  Domain dom = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  SolverOptions opt;
  opt.compute_contacts = false;
  for (auto _ : state) benchmark::DoNotOptimize(extremal_disk(dom, {0.7, 0.2}, opt));
}
BENCHMARK(BM_ExtremalDisk);

static void BM_KPLength(benchmark::State& state) {
  Domain dom = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(kp_length_numeric(dom, {0, 0}, {2, 0}, 1e-3));
}
BENCHMARK(BM_KPLength);

static void BM_NumericConformalMap(benchmark::State& state) {
  Domain dom{DiskUnionDomain::canonical({0.6, 0.5, 0.4})};
  for (auto _ : state)
    benchmark::DoNotOptimize(NumericConformalMap::build(dom, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NumericConformalMap)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
