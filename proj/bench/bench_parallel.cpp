// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/experiments.hpp"

using namespace chromstream;

namespace {

Execution policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_VerifyGrouped(benchmark::State& state) {
  const auto cpg = construct_lines_grouped(1024, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cluster_packing(cpg, policy(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_VerifyDense(benchmark::State& state) {
  DenseParams params;
  params.k = 2;
  params.d = 7;
  params.p = 5;
  params.family = gen_intersection_family(7, 3, 1, 3, 0, FamilyMode::fano);
  const auto cpg = construct_dense(params);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cluster_packing(cpg, policy(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_ShrinkageTrials(benchmark::State& state) {
  ShrinkageConfig cfg;
  cfg.graph = GraphSpec::gnm(150, 3000);
  cfg.trials = 16;
  cfg.sampling.budget_multiplier = 0.25;
  cfg.sampling.mode = ColoringMode::exact_or_greedy;
  cfg.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(experiment_edge_shrinkage(cfg));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_DistinguisherTrials(benchmark::State& state) {
  DistinguisherConfig cfg;
  cfg.algorithm = Distinguisher::random_order;
  cfg.small_side = GraphSpec::bipartite(200, 0.5);
  cfg.large_side = GraphSpec::planted(200, 30, 0.5);
  cfg.trials = 16;
  cfg.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(experiment_distinguisher(cfg));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_VerifyGrouped)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShrinkageTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistinguisherTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
