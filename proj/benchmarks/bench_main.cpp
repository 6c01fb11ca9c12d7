// Copyright 2026 The qfound Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "qfound/dynamics.hpp"
#include "qfound/entropy.hpp"
#include "qfound/geometry.hpp"
#include "qfound/models.hpp"
#include "qfound/ptable.hpp"

using namespace qfound;

namespace {

void BM_FramesCircle(benchmark::State& state) {
  const auto m = geometry::build_circle_by_adjunction(1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames(m.table, kDefaultTolerance, 1100));
  state.counters["elements"] = static_cast<double>(m.table.size());
}
BENCHMARK(BM_FramesCircle)->DenseRange(3, 8);

void BM_FramesCrqm(benchmark::State& state) {
  const auto m = models::crqm_table(Ring::C, 4, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames(m.table));
}
BENCHMARK(BM_FramesCrqm)->Arg(8)->Arg(24)->Arg(56);

void BM_AxiomFourCircle(benchmark::State& state) {
  const auto m = geometry::build_circle_by_adjunction(1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom_four(m.table));
}
BENCHMARK(BM_AxiomFourCircle)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_AxiomFourSkeleton(benchmark::State& state) {
  const auto t = models::skeleton_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom_four(t));
}
BENCHMARK(BM_AxiomFourSkeleton)->Arg(1)->Arg(4)->Arg(16);

void BM_InfoEntropyQuadrature(benchmark::State& state) {
  const entropy::QuadratureSpec spec{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(entropy::info_entropy_qubit(Ring::R, spec));
}
BENCHMARK(BM_InfoEntropyQuadrature)->RangeMultiplier(4)->Range(16, 1024);

void BM_InfoEntropyMonteCarlo(benchmark::State& state) {
  const auto ring = static_cast<Ring>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entropy::info_entropy_mc(ring, 100'000, 1));
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_InfoEntropyMonteCarlo)
    ->Arg(static_cast<int>(Ring::R))
    ->Arg(static_cast<int>(Ring::C))
    ->Arg(static_cast<int>(Ring::H))
    ->Unit(benchmark::kMillisecond);

void BM_HiddenVariable(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(models::hv_skeleton_simulate(static_cast<int>(state.range(0)), 100'000, 1));
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_HiddenVariable)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZenoChain(benchmark::State& state) {
  auto rng = make_engine(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = dynamics::random_hermitian(n, rng);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  psi(0) = 1.0;
  const double tau = 0.05 / dynamics::dispersion(h, psi);
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::zeno_chain(h, psi, tau, 1000));
}
BENCHMARK(BM_ZenoChain)->DenseRange(2, 6, 2);

}  // namespace

// The distro's prebuilt benchmark_main archive carries LTO bytecode from a
// different compiler release, so the entry point is defined here.
BENCHMARK_MAIN();
