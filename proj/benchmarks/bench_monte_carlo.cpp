#include <benchmark/benchmark.h>

#include "cimono/monte_carlo.hpp"

namespace {

using namespace cimono;

void BM_SimulateGammaScale(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const mc::McConfig config{ci::GammaScaleFamily(1.0, 2.0), n, Probability(0.05),
                            10000, 42};
  for (auto _ : state) benchmark::DoNotOptimize(mc::simulate(config));
}
BENCHMARK(BM_SimulateGammaScale)->Arg(5)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_SimulateUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const mc::McConfig config{ci::UniformScaleFamily(1.0), n, Probability(0.1), 10000,
                            42};
  for (auto _ : state) benchmark::DoNotOptimize(mc::simulate(config));
}
BENCHMARK(BM_SimulateUniform)->Arg(5)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
