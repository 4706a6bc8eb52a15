#include <benchmark/benchmark.h>

#include "solvstab/verifier.hpp"

using namespace solvstab;

static void BM_AnalyzeGamma243(benchmark::State& state) {
  MatrixGroup g = semilinear_group(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, 9, "Gamma(3^5)").good_count());
}
BENCHMARK(BM_AnalyzeGamma243);

static void BM_AnalyzeWreath(benchmark::State& state) {
  PermGroup s3(3, {parse_permutation("(0,1,2)", 3), parse_permutation("(0,1)", 3)});
  MatrixGroup g = wreath_linear(gamma0(2, 2), s3);  // dimension 6 over F_2
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, 9, "wreath").good_count());
}
BENCHMARK(BM_AnalyzeWreath);

static void BM_MinTwoPointDl(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(3, 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(min_two_point_dl(aff).min_derived_length);
}
BENCHMARK(BM_MinTwoPointDl);

static void BM_DerivedSeries(benchmark::State& state) {
  PermGroup rep = named_group("GL(2,3)").permutation_rep();
  for (auto _ : state) benchmark::DoNotOptimize(derived_series(rep).size());
}
BENCHMARK(BM_DerivedSeries);

BENCHMARK_MAIN();
