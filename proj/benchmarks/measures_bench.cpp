#include <benchmark/benchmark.h>

#include "skewcorr/skewcorr.hpp"

namespace {

using namespace skewcorr;

BipartiteState bench_state(int dim_b) {
  return BipartiteState(random_density(2 * dim_b, 2 * dim_b, 2024), 2, dim_b);
}

void BM_MatrixSqrt(benchmark::State& state) {
  const ComplexMatrix rho = bench_state(static_cast<int>(state.range(0))).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(matrix_sqrt(rho));
}
BENCHMARK(BM_MatrixSqrt)->Arg(2)->Arg(3)->Arg(8);

void BM_WMatrix(benchmark::State& state) {
  const BipartiteState rho = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(w_matrix(rho));
}
BENCHMARK(BM_WMatrix)->Arg(2)->Arg(3)->Arg(8);

void BM_Uin(benchmark::State& state) {
  const BipartiteState rho = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uin(rho));
}
BENCHMARK(BM_Uin)->Arg(2)->Arg(3)->Arg(8);

void BM_MinHs(benchmark::State& state) {
  const BipartiteState rho = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_hs(rho));
}
BENCHMARK(BM_MinHs)->Arg(2)->Arg(3);

void BM_OracleMuin(benchmark::State& state) {
  const BipartiteState rho = bench_state(2);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_muin(rho, samples, 40));
}
BENCHMARK(BM_OracleMuin)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_AmplitudeDampingSweep(benchmark::State& state) {
  const BipartiteState rho = example_state();
  const auto grid = uniform_grid(101);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sweep(rho, amplitude_damping, grid, {"uin", "muin", "lqu", "min_hs"}));
  }
}
BENCHMARK(BM_AmplitudeDampingSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
