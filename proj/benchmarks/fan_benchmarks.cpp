#include "shardfan/builders.hpp"
#include "shardfan/shard_intersections.hpp"
#include "shardfan/verify.hpp"

#include <benchmark/benchmark.h>

using namespace shardfan;

namespace {

const Fan& a3() {
  static const Fan fan = gen_coxeter_a(3);
  return fan;
}

struct A3Stack {
  FanGeometry geom = FanGeometry::build_validated(a3());
  ChamberPoset poset = orient_hasse(geom);
  ShardDecomposition dec = compute_shards(geom, poset);
};

const A3Stack& a3_stack() {
  static const A3Stack stack;
  return stack;
}

void BM_ValidateA3(benchmark::State& state) {
  for (auto _ : state) {
    ValidationOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    benchmark::DoNotOptimize(validate_fan(a3(), opts).ok());
  }
}
BENCHMARK(BM_ValidateA3)->Arg(1)->Arg(4);

void BM_OrientHasseA3(benchmark::State& state) {
  FanGeometry geom = FanGeometry::build_validated(a3());
  for (auto _ : state) benchmark::DoNotOptimize(orient_hasse(geom).arrows().size());
}
BENCHMARK(BM_OrientHasseA3);

void BM_SemidistributiveA3(benchmark::State& state) {
  const auto& s = a3_stack();
  for (auto _ : state) benchmark::DoNotOptimize(s.poset.check_semidistributive().ok);
}
BENCHMARK(BM_SemidistributiveA3);

void BM_ShardsA3(benchmark::State& state) {
  const auto& s = a3_stack();
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_shards(s.geom, s.poset).shards.size());
}
BENCHMARK(BM_ShardsA3);

void BM_CanonicalJoinOracleTopA3(benchmark::State& state) {
  const auto& s = a3_stack();
  for (auto _ : state)
    benchmark::DoNotOptimize(s.poset.canonical_join_rep(s.poset.top()).elements.size());
}
BENCHMARK(BM_CanonicalJoinOracleTopA3);

void BM_ShardIntersectionsA3(benchmark::State& state) {
  const auto& s = a3_stack();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_shard_intersections(s.geom, s.poset, s.dec).elements.size());
}
BENCHMARK(BM_ShardIntersectionsA3);

void BM_VerifySuiteCrown55(benchmark::State& state) {
  const Fan fan = gen_crown(5, 5);
  for (auto _ : state) {
    VerifyOptions opts;
    benchmark::DoNotOptimize(run_verify_suite(fan, opts).all_passed());
  }
}
BENCHMARK(BM_VerifySuiteCrown55);

}  // namespace

BENCHMARK_MAIN();
