#include <benchmark/benchmark.h>

#include "camcom/camcom.hpp"
#include "camcom/divisor.hpp"
#include "camcom/model.hpp"
#include "camcom/powerlaw.hpp"

namespace {

void BM_ApportionEu27(benchmark::State& state) {
  const auto roster = camcom::builtin_eu27();
  const auto weights = camcom::log_weights(roster, 0.9);
  for (auto _ : state) {
    auto seats = camcom::apportion(weights, 616, camcom::RoundingRule::Upward);
    benchmark::DoNotOptimize(seats);
  }
}
BENCHMARK(BM_ApportionEu27);

void BM_ExponentRangeEu27(benchmark::State& state) {
  const auto roster = camcom::builtin_eu27();
  const auto weights = camcom::log_weights(roster, 0.9);
  const auto seats = camcom::apportion(weights, 616, camcom::RoundingRule::Upward);
  for (auto _ : state) {
    auto range = camcom::exponent_range(roster, seats);
    benchmark::DoNotOptimize(range);
  }
}
BENCHMARK(BM_ExponentRangeEu27);

void BM_CamComEu27(benchmark::State& state) {
  const camcom::ApportionmentProblem problem{camcom::builtin_eu27()};
  for (auto _ : state) {
    auto composition = camcom::camcom_apportion(problem);
    benchmark::DoNotOptimize(composition);
  }
}
BENCHMARK(BM_CamComEu27);

void BM_SolveTargetEu27(benchmark::State& state) {
  const auto roster = camcom::builtin_eu27();
  for (auto _ : state) {
    auto trace = camcom::solve_target(roster, 616, 91);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_SolveTargetEu27);

}  // namespace

BENCHMARK_MAIN();
