#include <benchmark/benchmark.h>

#include <cmath>

#include "hhconvex/quadrature.hpp"
#include "hhconvex/specfun.hpp"

namespace {

// |z| <= 0.5 takes the series path, larger z the Euler integral.
void BM_Gauss2F1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(hhc::gauss_2f1({4.0, 2.0, 3.5, z}));
}
BENCHMARK(BM_Gauss2F1)->Arg(-45)->Arg(10)->Arg(45)->Arg(60)->Arg(90)->Arg(99);

void BM_LnGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhc::ln_gamma(x));
    x = x < 100.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_LnGamma);

void BM_IntegrateSmooth(benchmark::State& state) {
  const hhc::QuadratureSpec spec{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhc::integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0, spec));
  }
}
BENCHMARK(BM_IntegrateSmooth);

void BM_IntegrateEndpointSingularity(benchmark::State& state) {
  const hhc::QuadratureSpec spec{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhc::integrate([](double x) { return std::pow(x, 0.1); }, 0.0, 1.0, spec));
  }
}
BENCHMARK(BM_IntegrateEndpointSingularity);

}  // namespace
