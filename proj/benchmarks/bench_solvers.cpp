#include <benchmark/benchmark.h>

#include "fairteam/approx_submodular.hpp"
#include "fairteam/exact.hpp"
#include "fairteam/fptas_additive.hpp"
#include "fairteam/instances.hpp"

using namespace fairteam;

static void BM_ValueOracleCoverage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(RandomKind::kCoverage, n, 1, 0.5);
  AgentSet s = 0;
  for (auto _ : state) {
    s = (s + 0x9e3779b9) & inst.all_agents();
    benchmark::DoNotOptimize(inst.value(s));
  }
}
BENCHMARK(BM_ValueOracleCoverage)->Arg(8)->Arg(12)->Arg(16);

static void BM_DemandSetCoverage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(RandomKind::kCoverage, n, 2, 0.5);
  PriceVector pv;
  pv.ground = inst.all_agents();
  pv.prices.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) pv.prices[static_cast<std::size_t>(i)] = 0.02 * (i + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(demand_set(inst, pv));
  }
}
BENCHMARK(BM_DemandSetCoverage)->Arg(8)->Arg(12)->Arg(16);

static void BM_ExactFair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(RandomKind::kCoverage, n, 3, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_fair_bruteforce(inst).revenue);
  }
}
BENCHMARK(BM_ExactFair)->Arg(8)->Arg(12)->Arg(16);

static void BM_NdGreedyAdditive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(RandomKind::kAdditive, n, 4, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nondiscriminatory_additive(inst).revenue);
  }
}
BENCHMARK(BM_NdGreedyAdditive)->Arg(8)->Arg(16)->Arg(32);

static void BM_Fptas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double gamma = static_cast<double>(state.range(1)) / 10.0;
  const Instance inst = random_instance(RandomKind::kAdditive, n, 5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fptas(inst, gamma).revenue);
  }
}
BENCHMARK(BM_Fptas)->Args({6, 5})->Args({8, 5})->Args({8, 2})->Args({10, 2});

static void BM_ConstantApprox(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_instance(RandomKind::kCoverage, n, 6, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(constant_approx(inst).revenue);
  }
}
BENCHMARK(BM_ConstantApprox)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
