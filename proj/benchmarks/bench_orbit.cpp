#include <benchmark/benchmark.h>

#include "solvstab/constructions.hpp"
#include "solvstab/powerset.hpp"

using namespace solvstab;

static void BM_VectorOrbits(benchmark::State& state) {
  MatrixGroup g = semilinear_group(3, 5);  // 243 vectors
  g.permutation_rep();                     // build the action outside the loop
  for (auto _ : state) benchmark::DoNotOptimize(vector_orbits(g).size());
}
BENCHMARK(BM_VectorOrbits);

static void BM_PointOrbit(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(aff, 1).size());
}
BENCHMARK(BM_PointOrbit);

static void BM_PowersetTable(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(2, state.range(0)));
  for (auto _ : state) {
    SubsetOrbitTable table(aff);
    benchmark::DoNotOptimize(table.num_orbits());
  }
}
BENCHMARK(BM_PowersetTable)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
