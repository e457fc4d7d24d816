// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "qpcluster/quantum_seed.hpp"
#include "qpcluster/sweep.hpp"

namespace {

using namespace qpc;

QuantumSeed kronecker_root() {
  const Quantization qz = quantize(Quiver(2, 2, {{"a", 1, 2}, {"b", 1, 2}}));
  return initial_seed(exchange_matrix(qz.quiver), qz.lambda);
}

/// Cluster variables far from the root, so their expansions are large.
std::pair<TorusElement, SkewForm> deep_operands(int steps) {
  QuantumSeed s = kronecker_root();
  for (int i = 0; i < steps; ++i) s = mutate_seed(s, 1 + i % 2);
  return {s.z[0], s.lambda};
}

void BM_TorusMulSerial(benchmark::State& st) {
  const auto [x, lambda] = deep_operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(torus_mul_serial(x, x, lambda));
}

void BM_TorusMulParallel(benchmark::State& st) {
  const auto [x, lambda] = deep_operands(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(torus_mul(x, x, lambda));
}

std::vector<SeedVisit> sweep_visits() {
  const Quantization qz = quantize(Quiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}));
  return enumerate_seeds(initial_seed(exchange_matrix(qz.quiver), qz.lambda), 4);
}

void BM_PositivitySweepSerial(benchmark::State& st) {
  const auto visits = sweep_visits();
  const auto exps = cluster_monomial_exponents(6, 3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(positivity_sweep_serial(visits, exps));
}

void BM_PositivitySweepParallel(benchmark::State& st) {
  const auto visits = sweep_visits();
  const auto exps = cluster_monomial_exponents(6, 3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(positivity_sweep(visits, exps));
}

void BM_EnumerateSeedsSerial(benchmark::State& st) {
  const auto root = kronecker_root();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_seeds(root, static_cast<int>(st.range(0))));
}

void BM_EnumerateSeedsParallel(benchmark::State& st) {
  const auto root = kronecker_root();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_seeds_parallel(root, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_TorusMulSerial)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusMulParallel)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PositivitySweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PositivitySweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSeedsSerial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSeedsParallel)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
