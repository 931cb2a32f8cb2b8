#include <benchmark/benchmark.h>

#include "hhconvex/function.hpp"
#include "hhconvex/inequalities.hpp"
#include "hhconvex/sweep.hpp"

namespace {

void BM_Thm23(benchmark::State& state) {
  const hhc::RealFunction f = hhc::parse_function("pow:0.5");
  for (auto _ : state) benchmark::DoNotOptimize(hhc::check_thm23(f, 1.0, 3.0, 0.5, 0.8, 2.0));
}
BENCHMARK(BM_Thm23);

void BM_Thm25(benchmark::State& state) {
  const hhc::RealFunction f = hhc::parse_function("log");
  for (auto _ : state) benchmark::DoNotOptimize(hhc::check_thm25(f, 1.0, 3.0, 0.5, 0.8, 2.0));
}
BENCHMARK(BM_Thm25);

void BM_Hypothesis(benchmark::State& state) {
  const hhc::RealFunction f = hhc::parse_function("pow:0.5");
  hhc::HypothesisRequest request{"thm-2.3", 1.0, 3.0, 1.0, 1.0, 2.0};
  request.scheme.grid_density = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hhc::check_hypothesis(f, request));
}
BENCHMARK(BM_Hypothesis)->Arg(9)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  hhc::SweepConfig config;
  config.count = 200;
  config.threads = 1;
  config.statements = {"thm-2.2", "thm-2.3", "thm-2.4", "thm-2.5"};
  config.check_hypothesis = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(hhc::run_sweep(config));
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
