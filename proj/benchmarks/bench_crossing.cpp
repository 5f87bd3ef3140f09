#include <benchmark/benchmark.h>

#include "cimono/crossing.hpp"

namespace {

void BM_CdfCrossing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pair = cimono::crossing::gamma_scale_pair(n, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(cimono::crossing::cdf_crossing(pair));
}
BENCHMARK(BM_CdfCrossing)->Arg(1)->Arg(10)->Arg(100);

void BM_AlphaStarCurve(benchmark::State& state) {
  // One full alpha* column, n = 2..50.
  for (auto _ : state) {
    double acc = 0.0;
    for (int n = 2; n <= 50; ++n)
      acc += cimono::crossing::alpha_star_normal_variance(n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AlphaStarCurve)->Unit(benchmark::kMillisecond);

}  // namespace
