#include <benchmark/benchmark.h>

#include "bercong/bernoulli.hpp"
#include "bercong/zeta.hpp"

using namespace bercong;

// memoized after the first call; measures lookup plus copy
static void BM_BernoulliExactWarm(benchmark::State& state) {
  const auto n = state.range(0);
  bernoulli_exact(n);
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_exact(n));
}
BENCHMARK(BM_BernoulliExactWarm)->Arg(100)->Arg(1000)->Arg(2000);

static void BM_BernoulliModExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_mod(state.range(0), 31, 5));
}
BENCHMARK(BM_BernoulliModExact)->Arg(400)->Arg(2000);

static void BM_BernoulliModPowerSum(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const std::int64_t n = p * p + 1;
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_mod_powersum(n + (n % 2), p, state.range(1)));
}
BENCHMARK(BM_BernoulliModPowerSum)->Args({47, 4})->Args({101, 4})->Args({31, 6});

static void BM_EstimateCoeffs(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_coeffs(p, 2, static_cast<int>(p - 3)));
}
BENCHMARK(BM_EstimateCoeffs)->Arg(13)->Arg(23);
