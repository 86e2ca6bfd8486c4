#include <benchmark/benchmark.h>

#include "splitq/splitq.hpp"

using namespace splitq;

static void BM_MultiplyExact(benchmark::State& state) {
  const ExactQuat p(1, 2, 3, 4);
  const ExactQuat q(Rational(1, 2), -3, Rational(5, 7), 1);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_MultiplyExact);

static void BM_MultiplyApprox(benchmark::State& state) {
  const ApproxQuat p(1, 2, 3, 4);
  const ApproxQuat q(0.5, -3, 0.7, 1);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_MultiplyApprox);

static void BM_MpInverseLightlike(benchmark::State& state) {
  const ExactQuat a(1, 1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mp_inverse(a));
}
BENCHMARK(BM_MpInverseLightlike);

static void BM_SolveAxb(benchmark::State& state) {
  const ExactQuat a(1, 0, 1, 0);
  const ExactQuat b(1, 1, 1, 1);
  const ExactQuat d = a * ExactQuat(2, -1, 3, 1) * b;
  for (auto _ : state) benchmark::DoNotOptimize(solve_axb(a, b, d));
}
BENCHMARK(BM_SolveAxb);

static void BM_IsSimilar(benchmark::State& state) {
  const ExactQuat a(1, 5, 3, 4);
  const ExactQuat b(1, 13, 12, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_similar(a, b));
}
BENCHMARK(BM_IsSimilar);

static void BM_RankT(benchmark::State& state) {
  const ExactQuat a(1, 5, 5, 2);
  const ExactQuat b(2, 1, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(t_matrix(a, b)));
}
BENCHMARK(BM_RankT);

static void BM_Roots(benchmark::State& state) {
  const ApproxQuat q(1, 0, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nth_roots(q, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Roots)->Arg(2)->Arg(5);

BENCHMARK_MAIN();
