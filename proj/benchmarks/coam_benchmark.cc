// Copyright 2026 The Authors.
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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "coam/coamoeba.h"
#include "coam/configuration.h"
#include "coam/discriminant.h"
#include "coam/exact_linalg.h"
#include "coam/harness.h"
#include "coam/matroid.h"
#include "coam/polynomial.h"
#include "coam/tropical_fan.h"

namespace coam {
namespace {

VectorConfiguration running_b() {
  return VectorConfiguration::make(IntMatrix{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {-2, -1, -2}, {0, -2, 1}});
}

// n random rows in Z^d with entries in [-3, 3]; the last row balances the sum.
VectorConfiguration random_b(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  while (true) {
    IntMatrix b(n, d);
    for (std::size_t j = 0; j < d; ++j) {
      Int sum = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        b(i, j) = entry(rng);
        sum += b(i, j);
      }
      b(n - 1, j) = -sum;
    }
    VectorConfiguration v = VectorConfiguration::make(b);
    if (!v.has_zero_row() && rank_rational(b) == d) return v;
  }
}

void BM_MatroidBuild(benchmark::State& state) {
  VectorConfiguration b = random_b(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Matroid::build(b));
}
BENCHMARK(BM_MatroidBuild)->Args({8, 3})->Args({12, 4})->Args({16, 5});

void BM_Flats(benchmark::State& state) {
  Matroid m = Matroid::build(random_b(static_cast<std::size_t>(state.range(0)),
                                      static_cast<std::size_t>(state.range(1)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(flats(m));
}
BENCHMARK(BM_Flats)->Args({8, 3})->Args({12, 4});

void BM_Flacets(benchmark::State& state) {
  Matroid m = Matroid::build(running_b());
  for (auto _ : state) benchmark::DoNotOptimize(flacets(m));
}
BENCHMARK(BM_Flacets);

void BM_MaximalCones(benchmark::State& state) {
  Matroid m = Matroid::build(running_b());
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cones(m));
}
BENCHMARK(BM_MaximalCones);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-50, 50);
  IntMatrix m(n, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n + 2; ++j) m(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_GaleDual(benchmark::State& state) {
  PointConfiguration a = PointConfiguration::make(
      IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 0, 1, 4, 2, 3}, {0, 1, 0, 2, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(gale_dual(a));
}
BENCHMARK(BM_GaleDual);

void BM_ParseDiscriminant(benchmark::State& state) {
  const std::string text = to_polynomial_file(
      read_polynomial_file(std::string(COAM_BENCH_DATA_DIR) + "/big_discriminant.txt"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial_file(text));
}
BENCHMARK(BM_ParseDiscriminant);

void BM_ResidueCheck(benchmark::State& state) {
  SparsePoly f = read_polynomial_file(std::string(COAM_BENCH_DATA_DIR) +
                                      "/big_discriminant.txt");
  Matroid m = Matroid::build(running_b());
  for (auto _ : state) benchmark::DoNotOptimize(residue_check(f, m, 20));
}
BENCHMARK(BM_ResidueCheck);

void BM_BuildCycle(benchmark::State& state) {
  VectorConfiguration f = VectorConfiguration::make(IntMatrix{{3, 0}, {0, 1}, {-1, -2}, {-2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(build_cycle(f));
}
BENCHMARK(BM_BuildCycle);

void BM_ConjectureExperiment(benchmark::State& state) {
  Matroid m = Matroid::build(running_b());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjecture_experiment_d3(m, n, 1e-6, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_ConjectureExperiment)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace coam

BENCHMARK_MAIN();
