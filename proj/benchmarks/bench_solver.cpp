#include <benchmark/benchmark.h>

#include "cayley/free_energy.hpp"
#include "cayley/solver.hpp"

namespace {

using namespace cayley;

void BM_SolveTI(benchmark::State& state) {
  const ModelParams p(static_cast<int>(state.range(0)), 1.0, 0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_TI(p));
}
BENCHMARK(BM_SolveTI)->Arg(2)->Arg(3)->Arg(6);

void BM_SolveAlternating(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_alternating(k, 1, 0.95));
}
BENCHMARK(BM_SolveAlternating)->Arg(2)->Arg(3)->Arg(6);

void BM_SolvePeriodic(benchmark::State& state) {
  const ModelParams p(2, -1.0, 0.2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_periodic(p));
}
BENCHMARK(BM_SolvePeriodic);

void BM_FeAlt(benchmark::State& state) {
  const SolutionSet set = solve_alternating_coupling(3, 1, 1.5);
  const Solution* s = set.find(Branch::Plus);
  for (auto _ : state)
    benchmark::DoNotOptimize(fe_alt(3, 1, 1, s->first, s->second, 1.5, 1.0, FieldLabel::Zero));
}
BENCHMARK(BM_FeAlt);

}  // namespace
