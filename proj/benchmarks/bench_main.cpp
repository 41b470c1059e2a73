#include <benchmark/benchmark.h>

#include "sesq/sesq.hpp"

namespace {

using namespace sesq;

FormPair pair_of(benchmark::State& state) {
  Rng rng(static_cast<std::uint64_t>(state.range(0)));
  return random_pair(rng, state.range(0), PairKind::oblique);
}

void BM_EigHermitian(benchmark::State& state) {
  const auto p = pair_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(p.t.matrix()));
  }
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(2, 64);

void BM_ParallelSum(benchmark::State& state) {
  const auto p = pair_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel_sum(p.t, p.w));
  }
}
BENCHMARK(BM_ParallelSum)->RangeMultiplier(2)->Range(2, 64);

void BM_LebesgueDecompose(benchmark::State& state) {
  const auto p = pair_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lebesgue_decompose(p.t, p.w));
  }
}
BENCHMARK(BM_LebesgueDecompose)->RangeMultiplier(2)->Range(2, 64);

void BM_LebesgueLimitOracle(benchmark::State& state) {
  const auto p = pair_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lebesgue_limit_oracle(p.t, p.w, 1 << 30));
  }
}
BENCHMARK(BM_LebesgueLimitOracle)->RangeMultiplier(2)->Range(2, 16);

void BM_Dilate(benchmark::State& state) {
  const Index m = state.range(0);
  const Index d = 2;
  Rng rng(7);
  const Form wl = random_form(rng, m * d, m * d);
  const Kernel k = kernel_of_form(random_form(rng, m * d, m), m, d);
  const Kernel l = kernel_of_form(wl, m, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilate(k, l));
  }
}
BENCHMARK(BM_Dilate)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
