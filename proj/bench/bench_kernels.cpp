// Serial against OpenMP kernels on the workloads the library runs them on.
// Thread count follows OMP_NUM_THREADS.

#include "hyperobs/kernels.hpp"
#include "hyperobs/mon.hpp"
#include "hyperobs/observability.hpp"

#include <benchmark/benchmark.h>

using namespace hyperobs;
namespace serial = hyperobs::kernels::serial;
namespace parallel = hyperobs::kernels::parallel;

namespace {

Hypergraph workload(int n) { return hypergraph_union(hyperring(n, 2), hyperring(n, 3)); }

std::vector<Polynomial> node_level(int n, int depth) {
  auto f = vector_field(workload(n));
  std::vector<Polynomial> level;
  for (int i = 0; i < n; ++i) level.push_back(Polynomial::variable(i));
  for (int j = 0; j < depth; ++j) level = serial::lie_step(level, f);
  return level;
}

template <bool Parallel>
void BM_LieStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = vector_field(workload(n));
  auto level = node_level(n, 3);
  for (auto _ : state) {
    auto next = Parallel ? parallel::lie_step(level, f) : serial::lie_step(level, f);
    benchmark::DoNotOptimize(next);
  }
}

template <bool Parallel>
void BM_EvaluateBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = workload(n);
  auto nom = nom_symbolic(observation_stack(g, sensor_matrix(SensorSet::of({1}), n), 4));
  PrimeField field(default_primes().front());
  std::vector<FieldRow> points;
  for (int t = 0; t < 16; ++t) points.push_back(random_point(trial_seed(1, 0, t), n, field));
  for (auto _ : state) {
    auto out = Parallel ? parallel::evaluate_batch(nom.rows, field, points) : serial::evaluate_batch(nom.rows, field, points);
    benchmark::DoNotOptimize(out);
  }
}

template <bool Parallel>
void BM_CandidateRanks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonOptions opts;
  opts.depth = 4;
  NodeRowBlocks blocks(workload(n), opts);
  std::vector<int> candidates;
  for (int v = 1; v < n; ++v) candidates.push_back(v);
  const auto& base = blocks.blocks()[0];
  for (auto _ : state) {
    auto out = Parallel ? parallel::candidate_ranks(base, blocks.blocks(), candidates, blocks.field())
                        : serial::candidate_ranks(base, blocks.blocks(), candidates, blocks.field());
    benchmark::DoNotOptimize(out);
  }
}

template <bool Parallel>
void BM_FirstFullRank(benchmark::State& state) {
  // Edgeless graph: no pair reaches rank n, so the whole list is scanned.
  const int n = static_cast<int>(state.range(0));
  MonOptions opts;
  NodeRowBlocks blocks(Hypergraph::create(n, {}), opts);
  std::vector<std::vector<int>> subsets;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) subsets.push_back({a, b});
  }
  for (auto _ : state) {
    auto hit = Parallel ? parallel::first_full_rank(blocks.blocks(), subsets, static_cast<std::size_t>(n), blocks.field())
                        : serial::first_full_rank(blocks.blocks(), subsets, static_cast<std::size_t>(n), blocks.field());
    benchmark::DoNotOptimize(hit);
  }
}

}  // namespace

BENCHMARK(BM_LieStep<false>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieStep<true>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateBatch<false>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateBatch<true>)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CandidateRanks<false>)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CandidateRanks<true>)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FirstFullRank<false>)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FirstFullRank<true>)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
