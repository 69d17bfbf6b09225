#include <benchmark/benchmark.h>

#include "groth/diffops.hpp"
#include "groth/lattice.hpp"
#include "groth/lgv.hpp"
#include "groth/tableaux.hpp"

using namespace groth;

static void BM_PartitionFunctionS4(benchmark::State& state) {
  const auto perms = all_permutations(4);
  std::vector<ModelInstance> models;
  for (const auto& w : perms) models.push_back(build_bumpless(w));
  for (auto _ : state)
    for (const auto& m : models) benchmark::DoNotOptimize(partition_function(m));
}
BENCHMARK(BM_PartitionFunctionS4)->Unit(benchmark::kMillisecond);

static void BM_DoubleGrothendieckIdentity(benchmark::State& state) {
  const int n = int(state.range(0));
  const VarRegistry reg(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(double_grothendieck(Permutation::identity(n), reg));
}
BENCHMARK(BM_DoubleGrothendieckIdentity)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveRMatrix(benchmark::State& state) {
  const WeightTable t = bumpless_table();
  for (auto _ : state) benchmark::DoNotOptimize(solve_r_matrix(t));
}
BENCHMARK(BM_SolveRMatrix)->Unit(benchmark::kMillisecond);

static void BM_LgvDeterminant(benchmark::State& state) {
  const Permutation w{1, 4, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(lgv_determinant(w));
}
BENCHMARK(BM_LgvDeterminant)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateSemidual(benchmark::State& state) {
  const ModelInstance m = build_semidual(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(m));
}
BENCHMARK(BM_EnumerateSemidual)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_FactorialGrothendieck(benchmark::State& state) {
  const Partition lam{2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factorial_grothendieck(lam, int(state.range(0))));
}
BENCHMARK(BM_FactorialGrothendieck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
