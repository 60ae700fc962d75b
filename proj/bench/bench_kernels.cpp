#include <benchmark/benchmark.h>

#include <random>

#include "mage/bgg.hpp"
#include "mage/qmatrix.hpp"

namespace {

mage::QMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  mage::QMatrix m(rows, cols);
  // Rank deficient on purpose: the last third of the rows repeat combinations of the rest.
  std::size_t free_rows = rows - rows / 3;
  for (std::size_t i = 0; i < free_rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(gen);
  for (std::size_t i = free_rows; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(i - free_rows, j) * 2 - m((i + 1) % free_rows, j);
  return m;
}

void BM_NullspaceSerial(benchmark::State& st) {
  auto m = random_matrix(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)) + 8, 7);
  for (auto _ : st) benchmark::DoNotOptimize(mage::nullspace(m));
}

void BM_NullspaceParallel(benchmark::State& st) {
  auto m = random_matrix(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)) + 8, 7);
  for (auto _ : st) benchmark::DoNotOptimize(mage::nullspace_parallel(m));
}

void BM_KernelDense(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mage::kernel_basis_dense(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
}

void BM_KernelBlockedSerial(benchmark::State& st) {
  mage::KernelOptions opts;
  opts.parallel = false;
  for (auto _ : st)
    benchmark::DoNotOptimize(mage::kernel_basis(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), opts));
}

void BM_KernelBlockedParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mage::kernel_basis(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
}

}  // namespace

BENCHMARK(BM_NullspaceSerial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullspaceParallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelDense)->Args({3, 1})->Args({2, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelBlockedSerial)->Args({3, 1})->Args({2, 3})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelBlockedParallel)->Args({3, 1})->Args({2, 3})->Args({4, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
