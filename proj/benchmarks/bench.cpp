// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "msx/frontier.hpp"
#include "msx/symmetry.hpp"

using namespace msx;

namespace {

void BM_HermitianEigenvalues9(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix pt = partial_transpose(sample_general_state(rng, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
  }
}
BENCHMARK(BM_HermitianEigenvalues9);

void BM_Negativity(benchmark::State& state) {
  Rng rng(2);
  const DensityMatrix rho = sample_general_state(rng, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity(rho));
  }
}
BENCHMARK(BM_Negativity);

void BM_SimplexStateBuild(benchmark::State& state) {
  Rng rng(3);
  const ProbabilityVector9 p = sample_simplex_point(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplex_state(p));
  }
}
BENCHMARK(BM_SimplexStateBuild);

void BM_ScanSample(benchmark::State& state) {
  // One full scan record: substream, simplex draw, state, entropy, negativity.
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_simplex(42 + i++, 1));
  }
}
BENCHMARK(BM_ScanSample);

void BM_SearchIterations(benchmark::State& state) {
  SearchOptions opts;
  opts.band_lo = 0.82;
  opts.band_hi = 0.9375;
  opts.budget = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_above_werner(7, opts));
  }
  state.SetItemsProcessed(state.iterations() * opts.budget);
}
BENCHMARK(BM_SearchIterations)->Arg(1000);

void BM_OrbitEnumeration(benchmark::State& state) {
  const std::vector<ModIndex> cap = {ModIndex(0, 0), ModIndex(1, 0), ModIndex(1, 1),
                                     ModIndex(0, 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(cap));
  }
}
BENCHMARK(BM_OrbitEnumeration);

}  // namespace

BENCHMARK_MAIN();
