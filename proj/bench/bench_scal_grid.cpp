// Serial vs OpenMP curvature sweep over uniform grids.

#include <benchmark/benchmark.h>

#include <vector>

#include "infogeom/classification.hpp"
#include "infogeom/curvature.hpp"
#include "infogeom/kernels.hpp"

namespace {

using Kernel = void (*)(const infogeom::kernels::LevelWeights&, std::span<const double>, std::span<double>);

void run(benchmark::State& state, Kernel kernel) {
  const infogeom::kernels::LevelWeights lw(infogeom::binomial_family(static_cast<int>(state.range(0))));
  const auto grid = infogeom::uniform_grid(-30.0, 30.0, static_cast<std::size_t>(state.range(1)));
  std::vector<double> out(grid.size());
  for (auto _ : state) {
    kernel(lw, grid, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_ScalGridSerial(benchmark::State& state) { run(state, infogeom::kernels::scal_grid_serial); }
void BM_ScalGridOmp(benchmark::State& state) { run(state, infogeom::kernels::scal_grid_omp); }

}  // namespace

BENCHMARK(BM_ScalGridSerial)->Args({10, 601})->Args({50, 601})->Args({50, 10000});
BENCHMARK(BM_ScalGridOmp)->Args({10, 601})->Args({50, 601})->Args({50, 10000});

BENCHMARK_MAIN();
