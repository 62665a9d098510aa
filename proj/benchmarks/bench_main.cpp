// Copyright 2026 The noisy-qaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "nqaoa/experiments.hpp"
#include "nqaoa/gradopt.hpp"
#include "nqaoa/qaoa.hpp"
#include "nqaoa/rng.hpp"
#include "nqaoa/statevector.hpp"

namespace {

using namespace nqaoa;

QaoaParams fixed_params(std::size_t n) {
  QaoaParams p{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    p.gamma[k] = 0.3 + 0.1 * static_cast<double>(k);
    p.beta[k] = 0.5 - 0.1 * static_cast<double>(k);
  }
  return p;
}

void BM_StateVectorMixer(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  StateVector psi = StateVector::plus(m);
  const GateOp gate = mixer_gate(m / 2, 0.37);
  for (auto _ : state) {
    psi.apply(gate);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_StateVectorMixer)->Arg(10)->Arg(16)->Arg(20);

void BM_StateVectorCost(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  StateVector psi = StateVector::plus(m);
  const GateOp gate = cost_gate(0, m - 1, 0.21);
  for (auto _ : state) {
    psi.apply(gate);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_StateVectorCost)->Arg(10)->Arg(16)->Arg(20);

void BM_DensityChannel(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  DensityMatrix rho = DensityMatrix::from_pure(StateVector::plus(m));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.01);
  for (auto _ : state) {
    rho.apply_channel(ch, m / 2);
    benchmark::DoNotOptimize(&rho);
  }
}
BENCHMARK(BM_DensityChannel)->Arg(5)->Arg(7)->Arg(9);

void BM_ExactNoisyCost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightedGraph g = table1_graph();
  const ProblemHamiltonian h = problem_hamiltonian(g);
  const GateSequence c = build_circuit(g, fixed_params(n));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Dephasing, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(cost_exact(c, h, ch));
}
BENCHMARK(BM_ExactNoisyCost)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NoisyGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightedGraph g = table1_graph();
  const Evaluator eval =
      Evaluator::exact_noisy(NoiseChannel::make(ChannelKind::Depolarizing, 0.01));
  const QaoaParams p = fixed_params(n);
  for (auto _ : state) benchmark::DoNotOptimize(shift_rule_gradient(g, p, eval));
}
BENCHMARK(BM_NoisyGradient)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_IdealGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightedGraph g = table1_graph();
  const QaoaParams p = fixed_params(n);
  for (auto _ : state) benchmark::DoNotOptimize(shift_rule_gradient(g, p, Evaluator::ideal()));
}
BENCHMARK(BM_IdealGradient)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_Trajectory(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightedGraph g = table1_graph();
  const GateSequence c = build_circuit(g, fixed_params(n));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.01);
  Rng rng(derive_seed(7, {n}));
  for (auto _ : state) benchmark::DoNotOptimize(run_trajectory(c, ch, rng));
}
BENCHMARK(BM_Trajectory)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& state) {
  const WeightedGraph g = table1_graph();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ground(g));
}
BENCHMARK(BM_BruteForce);

}  // namespace

BENCHMARK_MAIN();
