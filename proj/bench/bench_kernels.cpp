// Serial reference against the OpenMP path for the three parallel kernels. The argument
// selects the mode: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "legendrian/montecarlo.hpp"
#include "legendrian/oracle.hpp"
#include "legendrian/upsilon.hpp"

using namespace legendrian;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_OracleRows(benchmark::State& state) {
  TrialRng rng(1);
  const PlaneCurveGerm c = random_generic_curve(5, 12, 1000000, rng);
  for (auto _ : state) {
    auto rows = monomial_rows(c, c.conductor(), mode_of(state));
    benchmark::DoNotOptimize(rows);
  }
}

void BM_UpsilonMatrix(benchmark::State& state) {
  const UpsilonContext ctx(4, 9);
  for (auto _ : state) {
    auto matrix = upsilon_matrix(ctx, UpsilonForm::Closed, mode_of(state));
    benchmark::DoNotOptimize(matrix);
  }
}

void BM_MonteCarloTrials(benchmark::State& state) {
  for (auto _ : state) {
    auto outcomes = verify_generic_trials(4, 11, 16, 1, 1000000, mode_of(state));
    benchmark::DoNotOptimize(outcomes);
  }
}

}  // namespace

BENCHMARK(BM_OracleRows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpsilonMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
