#include <benchmark/benchmark.h>

#include <vector>

#include "basecomb/basecomb.hpp"

using namespace basecomb;

static void BM_BinomB(benchmark::State& state) {
  const Base b(static_cast<std::int64_t>(state.range(0)));
  const Nat n("98765432109876543210");
  const Nat k("12345678901234567890");
  for (auto _ : state) benchmark::DoNotOptimize(binom_b(n, k, b));
}
BENCHMARK(BM_BinomB)->Arg(2)->Arg(3)->Arg(10);

static void BM_DominatedEnumeration(benchmark::State& state) {
  const Nat n(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    const DominatedRange range(n, 3);
    for (const Nat& k : range) {
      benchmark::DoNotOptimize(k);
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_DominatedEnumeration)->Arg(242)->Arg(59048);

static void BM_DigitalBinomial(benchmark::State& state) {
  const Nat n(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_digital_binomial(n, 3));
}
BENCHMARK(BM_DigitalBinomial)->Arg(80)->Arg(242);

static void BM_FibB(benchmark::State& state) {
  unsigned long n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fib_b(Nat(n++ % 100000), 5));
}
BENCHMARK(BM_FibB);

static void BM_FibTilde2(benchmark::State& state) {
  const Nat n(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fib_tilde2(n));
}
BENCHMARK(BM_FibTilde2)->Arg(1000)->Arg(10000);

static void BM_StirlingExplicit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stirling2_b_explicit(8, Nat(80), 3));
}
BENCHMARK(BM_StirlingExplicit);

static void BM_ExpConvolution(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_exp_convolution(3, order));
}
BENCHMARK(BM_ExpConvolution)->Arg(64)->Arg(243);

static void BM_ExpProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exp_b_product(0.5, 0.5, 3, 12));
}
BENCHMARK(BM_ExpProduct);

static void BM_ExpSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exp_b_series_numeric(0.5, 0.5, 3, 4096));
}
BENCHMARK(BM_ExpSeries);

BENCHMARK_MAIN();
