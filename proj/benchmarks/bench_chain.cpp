#include <benchmark/benchmark.h>

#include "solvstab/constructions.hpp"
#include "solvstab/stabilizer_chain.hpp"

using namespace solvstab;

static void BM_ChainAffineGL23(benchmark::State& state) {
  PermGroup aff = affine_group(named_group("GL(2,3)"));
  for (auto _ : state) {
    StabilizerChain chain = StabilizerChain::build(aff.degree(), aff.generators());
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_ChainAffineGL23);

static void BM_ChainAffineGamma128(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(2, 7));
  for (auto _ : state) {
    StabilizerChain chain = StabilizerChain::build(aff.degree(), aff.generators());
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_ChainAffineGamma128);

static void BM_MembershipStrip(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(3, 4));
  const StabilizerChain& chain = aff.chain();
  Permutation probe = compose(aff.generators()[0], aff.generators()[1]);
  for (auto _ : state) benchmark::DoNotOptimize(chain.contains(probe));
}
BENCHMARK(BM_MembershipStrip);

static void BM_PointwiseStabilizer(benchmark::State& state) {
  PermGroup aff = affine_group(semilinear_group(3, 4));
  for (auto _ : state) {
    PermGroup stab = pointwise_stabilizer(aff, {0, 1});
    benchmark::DoNotOptimize(stab.order());
  }
}
BENCHMARK(BM_PointwiseStabilizer);

BENCHMARK_MAIN();
