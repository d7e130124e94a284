#include <benchmark/benchmark.h>

#include <random>

#include "nred/catalog.hpp"
#include "nred/kernels.hpp"
#include "nred/nomizu.hpp"

namespace {

std::vector<nred::Multivector> forms(int dim, int count) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<nred::Multivector> out;
  const auto& masks = nred::masks_of_grade(dim, 3);
  for (int i = 0; i < count; ++i) {
    nred::Multivector T(dim);
    for (auto m : masks) T.add(m, N(gen));
    out.push_back(T);
  }
  return out;
}

void BM_SigmaSerial(benchmark::State& st) {
  auto f = forms(static_cast<int>(st.range(0)), 2000);
  for (auto _ : st) benchmark::DoNotOptimize(nred::sigma_batch_serial(f));
}
void BM_SigmaParallel(benchmark::State& st) {
  auto f = forms(static_cast<int>(st.range(0)), 2000);
  for (auto _ : st) benchmark::DoNotOptimize(nred::sigma_batch_parallel(f));
}
void BM_CliffordSerial(benchmark::State& st) {
  auto f = forms(static_cast<int>(st.range(0)), 500);
  for (auto _ : st) benchmark::DoNotOptimize(nred::clifford_square_batch_serial(f));
}
void BM_CliffordParallel(benchmark::State& st) {
  auto f = forms(static_cast<int>(st.range(0)), 500);
  for (auto _ : st) benchmark::DoNotOptimize(nred::clifford_square_batch_parallel(f));
}
void BM_JacobiSerial(benchmark::State& st) {
  auto L = nred::build_lie_algebra(*nred::build_entry("s3s3", {}).nomizu);
  for (auto _ : st) benchmark::DoNotOptimize(nred::jacobi_residual_serial(L));
}
void BM_JacobiParallel(benchmark::State& st) {
  auto L = nred::build_lie_algebra(*nred::build_entry("s3s3", {}).nomizu);
  for (auto _ : st) benchmark::DoNotOptimize(nred::jacobi_residual_parallel(L));
}

}  // namespace

BENCHMARK(BM_SigmaSerial)->DenseRange(3, 6);
BENCHMARK(BM_SigmaParallel)->DenseRange(3, 6);
BENCHMARK(BM_CliffordSerial)->DenseRange(4, 6);
BENCHMARK(BM_CliffordParallel)->DenseRange(4, 6);
BENCHMARK(BM_JacobiSerial);
BENCHMARK(BM_JacobiParallel);

BENCHMARK_MAIN();
