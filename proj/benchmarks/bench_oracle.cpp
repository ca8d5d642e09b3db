#include <benchmark/benchmark.h>

#include "cayley/boundary.hpp"
#include "cayley/oracle.hpp"
#include "cayley/solver.hpp"

namespace {

using namespace cayley;

void BM_LogPartitionRecursive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams p(2, 1.0, 0.0, 1.2);
  const SolutionSet set = solve_alternating_coupling(2, 1, p.coupling());
  const Solution* s = set.find(Branch::Plus);
  const TreeSpec tree(2, Rooting::Half, n);
  const auto a = build_alternating(tree, {1, 0, FieldLabel::Zero}, s->first, s->second);
  for (auto _ : state) benchmark::DoNotOptimize(log_partition_recursive(tree, a, p));
  state.counters["sites"] = static_cast<double>(ball_size(tree, n));
}
BENCHMARK(BM_LogPartitionRecursive)->DenseRange(8, 18, 5)->Unit(benchmark::kMillisecond);

void BM_LogPartitionEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelParams p(2, 1.0, 0.1, 1.0);
  const TreeSpec tree(2, Rooting::Half, n);
  const auto a = build_translation_invariant(tree, solve_TI(p).solutions.front().first);
  for (auto _ : state) benchmark::DoNotOptimize(log_partition_enumerate(tree, a, p));
}
BENCHMARK(BM_LogPartitionEnumerate)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
