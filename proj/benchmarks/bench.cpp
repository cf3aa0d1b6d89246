#include <benchmark/benchmark.h>

#include <vector>

#include "lagmult/hardy.hpp"
#include "lagmult/multiplier_norms.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/sequences.hpp"
#include "lagmult/special.hpp"

namespace {

using namespace lagmult;

void BM_BuildQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_quadrature(0.5, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildQuadrature)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_LaguerreEval(benchmark::State& state) {
  const long n = state.range(0);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(laguerre_eval(n, 1.5, x));
    x += 1e-3;
    if (x > 100.0) x = 0.0;
  }
}
BENCHMARK(BM_LaguerreEval)->Arg(10)->Arg(100)->Arg(1000);

void BM_LaguerreValues(benchmark::State& state) {
  std::vector<double> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    laguerre_values(0.5, 7.25, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_LaguerreValues)->Arg(64)->Arg(512);

void BM_WeightedM2Norm(benchmark::State& state) {
  const auto m = parse_sequence("char:16");
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_m2_norm(m, Order(0.5), 1.0, N).value);
}
BENCHMARK(BM_WeightedM2Norm)->Arg(32)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FracDiff(benchmark::State& state) {
  const auto m = parse_sequence("abel:0.99");
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_diff(m, 0.5, k).value);
    k = (k + 1) % 256;
  }
}
BENCHMARK(BM_FracDiff);

void BM_WbvNorm(benchmark::State& state) {
  const auto m = parse_sequence("riesz:32:0.5");
  for (auto _ : state) benchmark::DoNotOptimize(wbv_norm(m, 2.0, 1.0, 1024).norm);
}
BENCHMARK(BM_WbvNorm)->Unit(benchmark::kMillisecond);

void BM_HardyA(benchmark::State& state) {
  const auto inst = random_hardy_instance(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hardy_a(inst).B);
}
BENCHMARK(BM_HardyA)->Arg(256)->Arg(4096);

}  // namespace

// Own main: the packaged benchmark_main archive is LTO bytecode from another gcc.
BENCHMARK_MAIN();
