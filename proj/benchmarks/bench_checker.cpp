#include <benchmark/benchmark.h>

#include "bercong/checker.hpp"
#include "bercong/verifier.hpp"
#include "support/families.hpp"

using namespace bercong;

static void BM_CheckTheorem(benchmark::State& state) {
  const auto fam = testing::sun_s2_k3_b2();
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(fam));
}
BENCHMARK(BM_CheckTheorem);

static void BM_VerifyRange(benchmark::State& state) {
  const auto fam = testing::kummer_family();
  for (auto _ : state) benchmark::DoNotOptimize(verify_range(fam, 5, state.range(0)));
}
BENCHMARK(BM_VerifyRange)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
