#include <benchmark/benchmark.h>

#include "hlineq/hlineq.hpp"

namespace {

using namespace hlineq;

void BM_AlternatingAscent(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const MultilinearForm t = random_form(m, n, Distribution::Gaussian, 1);
  const ExponentVector p(static_cast<std::size_t>(m), Exponent(m + 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_ascent(t, p).value);
}
BENCHMARK(BM_AlternatingAscent)->Args({2, 4})->Args({3, 4})->Args({3, 8})->Args({4, 4});

void BM_ExactSignNorm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const MultilinearForm t = random_form(m, n, Distribution::Gaussian, 2);
  for (auto _ : state) benchmark::DoNotOptimize(opnorm_infinity_exact(t).value);
}
BENCHMARK(BM_ExactSignNorm)->Args({2, 4})->Args({2, 8})->Args({3, 4})->Args({3, 6});

void BM_GridBracket(benchmark::State& state) {
  const MultilinearForm t = random_form(2, 2, Distribution::Gaussian, 3);
  const ExponentVector p(2, Exponent(4.0));
  for (auto _ : state) benchmark::DoNotOptimize(opnorm_grid_bracket(t, p, static_cast<int>(state.range(0))).hi);
}
BENCHMARK(BM_GridBracket)->Arg(512)->Arg(4096);

void BM_RademacherAverage(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const MultilinearForm a = random_form(d, n, Distribution::Gaussian, 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiple_rademacher_l1(a));
}
BENCHMARK(BM_RademacherAverage)->Args({1, 8})->Args({2, 4})->Args({2, 6})->Args({3, 4});

void BM_PartialMixedSum(benchmark::State& state) {
  const MultilinearForm t = random_form(3, static_cast<int>(state.range(0)), Distribution::Gaussian, 5);
  for (auto _ : state) benchmark::DoNotOptimize(partial_mixed_sum(t, {2, 2.0, 4.0}));
}
BENCHMARK(BM_PartialMixedSum)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
