#include <benchmark/benchmark.h>

#include "cimono/specfun.hpp"

namespace {

using namespace cimono::specfun;

void BM_LogGamma(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(x));
}
BENCHMARK(BM_LogGamma)->Arg(2)->Arg(50)->Arg(5000);

void BM_RegGammaP(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reg_gamma_p(a, 0.9 * a));
}
BENCHMARK(BM_RegGammaP)->Arg(1)->Arg(10)->Arg(100)->Arg(500);

void BM_InvRegGammaP(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inv_reg_gamma_p(a, 0.025));
}
BENCHMARK(BM_InvRegGammaP)->Arg(1)->Arg(10)->Arg(100)->Arg(500);

void BM_StudentTQuantile(benchmark::State& state) {
  const double d = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(student_t_quantile(d, 0.975));
}
BENCHMARK(BM_StudentTQuantile)->Arg(1)->Arg(30)->Arg(200);

void BM_NormalQuantile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(normal_quantile(0.975));
}
BENCHMARK(BM_NormalQuantile);

}  // namespace
