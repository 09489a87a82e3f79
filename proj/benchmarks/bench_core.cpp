// Copyright 2026 The spinsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks for the kernels that dominate the critical-temperature
// searches: Hermitian eigensolves, partial transposes, realignment trace
// norms, thermal moments and full per-temperature verdicts.

#include <benchmark/benchmark.h>

#include "spinsq/analysis.hpp"
#include "spinsq/criteria.hpp"
#include "spinsq/linalg.hpp"
#include "spinsq/models.hpp"
#include "spinsq/separability.hpp"

#include <cstdlib>
#include <random>

namespace {

using namespace spinsq;

Matrix random_hermitian(Eigen::Index d, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  Matrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      a(r, c) = Complex(dist(gen), dist(gen));
    }
  }
  return 0.5 * (a + Matrix(a.adjoint()));
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  const Matrix h = random_hermitian(state.range(0), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(h));
  }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_PartialTransposeMinEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DensityMatrix rho =
      thermal_state({ModelFamily::HeisenbergRing, n, 0.0}, 4.0).state;
  const Bipartition cut = all_bipartitions(n).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        min_hermitian_eigenvalue(partial_transpose(rho.mat, cut)));
  }
}
BENCHMARK(BM_PartialTransposeMinEig)->Arg(5)->Arg(7)->Arg(9);

void BM_RealignTraceNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DensityMatrix rho =
      thermal_state({ModelFamily::HeisenbergRing, n, 0.0}, 4.0).state;
  const Bipartition cut = all_bipartitions(n).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_norm(realign(rho.mat, cut)));
  }
}
BENCHMARK(BM_RealignTraceNorm)->Arg(5)->Arg(7)->Arg(9);

void BM_ThermalMoments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ThermalSolver solver({ModelFamily::HeisenbergRing, n, 0.0});
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eval_squeezing_inequalities(solver.moments_at(t)).max_margin);
    t += 1e-3;  // defeat any memoization of identical inputs
  }
}
BENCHMARK(BM_ThermalMoments)->Arg(5)->Arg(7)->Arg(9);

void BM_PptVerdict(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ThermalSolver solver({ModelFamily::HeisenbergRing, n, 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(detects(solver, 4.0, Criterion::Ppt));
  }
}
BENCHMARK(BM_PptVerdict)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

int main(int argc, char** argv) {
  setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
