#include <benchmark/benchmark.h>

#include "hhconvex/coefficients.hpp"

namespace {

// Closed forms against their quadrature oracles on a moderate and a wide interval.

void BM_LambdaClosedForm(benchmark::State& state) {
  const double b = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hhc::lambda_coeff(0.5, 2.5, 1.0, b));
}
BENCHMARK(BM_LambdaClosedForm)->Arg(2)->Arg(20);

void BM_LambdaOracle(benchmark::State& state) {
  const double b = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hhc::lambda_coeff_oracle(0.5, 2.5, 1.0, b));
}
BENCHMARK(BM_LambdaOracle)->Arg(2)->Arg(20);

void BM_NuClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hhc::nu_coeff(0.5, 2.5, 1.0, 3.0));
}
BENCHMARK(BM_NuClosedForm);

void BM_Lambda123(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hhc::lambda123(1.0, 3.0));
}
BENCHMARK(BM_Lambda123);

void BM_Mu12(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hhc::mu12(2.5, 1.0, 3.0));
}
BENCHMARK(BM_Mu12);

}  // namespace
