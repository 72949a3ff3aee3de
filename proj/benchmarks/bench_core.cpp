// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "holoflow/flow.hpp"
#include "holoflow/holonomy.hpp"
#include "holoflow/linalg.hpp"
#include "../tests/support/testgen.hpp"

using namespace holoflow;
using std::numbers::pi;

static void BM_Expm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix h = testgen::random_skew(n, 4.0 * pi, rng);
  for (auto _ : state) benchmark::DoNotOptimize(expm(h));
}
BENCHMARK(BM_Expm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_HermitianEig(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix a = hermitian_part(testgen::random_gaussian(n, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32);

static void BM_UnitaryEig(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  UnitaryMatrix u = testgen::random_unitary(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(unitary_eig(u));
}
BENCHMARK(BM_UnitaryEig)->Arg(8)->Arg(16)->Arg(32);

static void BM_Synthesize(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::size_t m = n / 2;
  Frame f = testgen::random_frame(n, m, rng);
  BoundaryProblem prob =
      BoundaryProblem::create(f, testgen::random_unitary(m, rng));
  SynthesisParams params{testgen::random_unitary(2, rng), 2, {}};
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(prob, params));
}
BENCHMARK(BM_Synthesize)->Arg(8)->Arg(16)->Arg(32);

static void BM_Rk4Flow(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::size_t n = 8;
  Frame f = testgen::random_frame(n, 3, rng);
  BoundaryProblem prob =
      BoundaryProblem::create(f, testgen::random_unitary(3, rng));
  SkewHermitianMatrix h =
      synthesize(prob, {testgen::random_unitary(2, rng), 1, {}}).h_ambient;
  OrthoProjector p0 = OrthoProjector::from_frame(f);
  FlowConfig cfg{static_cast<std::size_t>(state.range(0)), 1, false};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_rk4(h, p0, cfg));
}
BENCHMARK(BM_Rk4Flow)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
