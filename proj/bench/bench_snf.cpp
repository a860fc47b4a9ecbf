// Threaded smith_normal_form against the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "bredonk/bredon/constructions.hpp"
#include "bredonk/bredon/datum.hpp"
#include "bredonk/exactlinalg/smith_normal_form.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"

namespace {

using namespace bredonk;

// ±1 entries at 5% density; dense random inputs blow up both algorithms
IntMatrix sparse_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  IntMatrix m(n, n + 10);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (u(rng) < 0.05) m(i, j) = u(rng) < 0.5 ? 1 : -1;
  return m;
}

IntMatrix hecke_boundary(unsigned long p) {
  return expand(lifted_fuchsian_datum(hecke_signature(p))).boundary(1);
}

void BM_SparseParallel(benchmark::State& state) {
  const auto m = sparse_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}

void BM_SparseSerial(benchmark::State& state) {
  const auto m = sparse_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::smith_normal_form_serial(m));
}

void BM_HeckeParallel(benchmark::State& state) {
  const auto m = hecke_boundary(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}

void BM_HeckeSerial(benchmark::State& state) {
  const auto m = hecke_boundary(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::smith_normal_form_serial(m));
}

void BM_PrimeSweep(benchmark::State& state) {
  const auto hi = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for (unsigned long p = 2; p <= hi; ++p)
      if (is_prime(p)) total += bredon_homology(fuchsian_datum(hecke_signature(p))).size();
    benchmark::DoNotOptimize(total);
  }
}

}  // namespace

BENCHMARK(BM_SparseParallel)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseSerial)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeParallel)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeSerial)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeSweep)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
