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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "nqaoa/error.hpp"
#include "nqaoa/linalg.hpp"
#include "nqaoa/maxcut.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/qaoa.hpp"
#include "nqaoa/rng.hpp"
#include "nqaoa/stats.hpp"

namespace nqaoa {
namespace {

constexpr double kTol = 1e-12;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;
using Dense = std::vector<std::vector<Complex>>;

// Independent dense oracle: full 2^m x 2^m matrices multiplied out.
Dense dense_identity(std::size_t d) {
  Dense u(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1.0;
  return u;
}

Dense dense_multiply(const Dense& a, const Dense& b) {
  const std::size_t d = a.size();
  Dense c(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double dense_cost(const WeightedGraph& g, const QaoaParams& params) {
  const std::size_t m = g.num_nodes();
  const std::size_t d = std::size_t{1} << m;
  Dense u = dense_identity(d);
  for (std::size_t k = 0; k < params.steps(); ++k) {
    Dense phase(d, std::vector<Complex>(d));
    for (std::size_t z = 0; z < d; ++z) {
      double e = 0.0;
      for (const Edge& edge : g.edges()) {
        const int zi = ((z >> edge.i) & 1U) ? -1 : 1;
        const int zj = ((z >> edge.j) & 1U) ? -1 : 1;
        e += edge.weight * zi * zj;
      }
      phase[z][z] = std::polar(1.0, -params.gamma[k] * e);
    }
    u = dense_multiply(phase, u);
    const double c = std::cos(params.beta[k]), s = std::sin(params.beta[k]);
    for (std::size_t q = 0; q < m; ++q) {
      Dense mix(d, std::vector<Complex>(d));
      for (std::size_t r = 0; r < d; ++r) {
        mix[r][r] = c;
        mix[r][r ^ (std::size_t{1} << q)] = Complex{0, s};
      }
      u = dense_multiply(mix, u);
    }
  }
  std::vector<Complex> psi(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) psi[r] += u[r][c] / std::sqrt(static_cast<double>(d));
  const ProblemHamiltonian h = problem_hamiltonian(g);
  double cost = 0.0;
  for (std::size_t z = 0; z < d; ++z) cost += std::norm(psi[z]) * h.energy(z);
  return cost;
}

QaoaParams random_params(std::size_t n, Rng& rng) {
  QaoaParams p{std::vector<double>(n), std::vector<double>(n)};
  for (auto& g : p.gamma) g = rng.uniform(-1.5, 1.5);
  for (auto& b : p.beta) b = rng.uniform(-1.5, 1.5);
  return p;
}

GateTag mixer_tag(std::size_t q) { return {GateRole::Mixer, 0, q, q, 1.0, 0.0}; }

// One-node, no-edge graph at beta = 0: a single identity mixer gate.
GateSequence toy_identity_circuit() {
  return build_circuit(WeightedGraph(1, {}), QaoaParams{{0.0}, {0.0}});
}

TEST(QaoaParams, Validation) {
  EXPECT_THROW((QaoaParams{{0.1}, {}}).validate(), ValidationError);
  EXPECT_THROW((QaoaParams{{}, {}}).validate(), ValidationError);
  EXPECT_THROW((QaoaParams{{NAN}, {0.0}}).validate(), ValidationError);
  const QaoaParams p{{1, 2}, {3, 4}};
  EXPECT_EQ(p.flatten(), (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(QaoaParams::from_flat(p.flatten()), p);
}

TEST(BuildCircuit, GateCounts) {
  const WeightedGraph g = table1_graph();
  EXPECT_EQ(build_circuit(g, QaoaParams{{0.1}, {0.2}}).gate_count(), 16U);
  EXPECT_EQ(build_circuit(g, QaoaParams{{0.1, 0.1, 0.1, 0.1}, {0.2, 0.2, 0.2, 0.2}}).gate_count(),
            64U);
}

TEST(BuildCircuit, LayerOrderAndProvenance) {
  const WeightedGraph g = table1_graph();
  const GateSequence c = build_circuit(g, QaoaParams{{0.3, 0.5}, {0.7, 0.9}});
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t e = 0; e < 9; ++e) {
      const GateTag& t = c.tags()[k * 16 + e];
      EXPECT_EQ(t.role, GateRole::Cost);
      EXPECT_EQ(t.step, k);
      EXPECT_EQ(t.q0, g.edges()[e].i);
      EXPECT_EQ(t.q1, g.edges()[e].j);
      EXPECT_NEAR(t.angle, (k == 0 ? 0.3 : 0.5) * g.edges()[e].weight, kTol);
    }
    for (std::size_t q = 0; q < 7; ++q) {
      const GateTag& t = c.tags()[k * 16 + 9 + q];
      EXPECT_EQ(t.role, GateRole::Mixer);
      EXPECT_EQ(t.q0, q);
      EXPECT_EQ(t.angle, k == 0 ? 0.7 : 0.9);
    }
  }
}

TEST(BuildCircuit, ZeroAnglesGiveIdentityGates) {
  const GateSequence c = build_circuit(table1_graph(), QaoaParams{{0.0, 0.0}, {0.0, 0.0}});
  for (const GateOp& op : c.gates()) {
    if (op.kind() == GateKind::Single) {
      EXPECT_LT(std::abs(op.single_matrix()[0] - 1.0), kTol);
      EXPECT_LT(std::abs(op.single_matrix()[1]), kTol);
    } else {
      for (std::size_t i = 0; i < 16; ++i)
        EXPECT_LT(std::abs(op.two_matrix()[i] - (i % 5 == 0 ? 1.0 : 0.0)), kTol);
    }
  }
}

TEST(RunIdeal, ZeroAnglesKeepPlusState) {
  const StateVector s = run_ideal(build_circuit(table1_graph(), QaoaParams{{0.0}, {0.0}}));
  EXPECT_NEAR(pure_fidelity(s, StateVector::plus(7)), 1.0, kTol);
}

TEST(RunIdeal, SingleEdgeQuarterPi) {
  const StateVector s =
      run_ideal(build_circuit(WeightedGraph(2, {{0, 1, 1.0}}), QaoaParams{{std::numbers::pi / 4}, {0.0}}));
  const Complex a = std::polar(0.5, -std::numbers::pi / 4), b = std::polar(0.5, std::numbers::pi / 4);
  const Complex want[] = {a, b, b, a};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(s[i] - want[i]), kTol);
}

TEST(RunIdeal, NormPreserved) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_NEAR(run_ideal(build_circuit(table1_graph(), random_params(n, rng))).norm(), 1.0, 1e-10);
}

TEST(CostExact, MatchesDenseOracle) {
  Rng rng(77);
  const WeightedGraph single(2, {{0, 1, 1.0}});
  const WeightedGraph tri(3, {{0, 1, 0.4}, {1, 2, -1.3}, {0, 2, 0.9}});
  const WeightedGraph four(4, {{0, 1, 0.5}, {1, 2, 0.7}, {2, 3, 1.1}, {0, 3, 0.3}, {0, 2, 0.6}});
  for (const WeightedGraph* g : {&single, &tri, &four}) {
    const ProblemHamiltonian h = problem_hamiltonian(*g);
    for (std::size_t n = 1; n <= 3; ++n) {
      const QaoaParams p = random_params(n, rng);
      EXPECT_NEAR(cost_exact(build_circuit(*g, p), h), dense_cost(*g, p), 1e-12);
    }
  }
}

TEST(CostExact, ZeroAnglesGiveZero) {
  const WeightedGraph g = table1_graph();
  EXPECT_NEAR(cost_exact(build_circuit(g, QaoaParams{{0.0}, {0.0}}), problem_hamiltonian(g)), 0.0,
              kTol);
}

TEST(CostExact, DiagonalCircuitIsZeroForAnyGamma) {
  Rng rng(3);
  const WeightedGraph g = table1_graph();
  for (int t = 0; t < 5; ++t) {
    const QaoaParams p{{rng.uniform(-3, 3), rng.uniform(-3, 3)}, {0.0, 0.0}};
    EXPECT_NEAR(cost_exact(build_circuit(g, p), problem_hamiltonian(g)), 0.0, kTol);
  }
}

TEST(CostExact, NoiselessChannelAgrees) {
  Rng rng(9);
  const WeightedGraph g = table1_graph();
  const ProblemHamiltonian h = problem_hamiltonian(g);
  for (std::size_t n = 1; n <= 2; ++n) {
    const GateSequence c = build_circuit(g, random_params(n, rng));
    for (auto kind : {ChannelKind::Dephasing, ChannelKind::BitFlip, ChannelKind::Depolarizing})
      EXPECT_NEAR(cost_exact(c, h, NoiseChannel::make(kind, 0.0)), cost_exact(c, h), 1e-10);
  }
}

TEST(CostExact, FullDepolarisationFlattensToZero) {
  Rng rng(10);
  const WeightedGraph g = table1_graph();
  const GateSequence c = build_circuit(g, random_params(2, rng));
  EXPECT_NEAR(cost_exact(c, problem_hamiltonian(g), NoiseChannel::make(ChannelKind::Depolarizing, 1.0)),
              0.0, 1e-12);
}

TEST(RunExactNoisy, NoiselessIsPureIdealState) {
  Rng rng(2);
  const GateSequence c = build_circuit(table1_graph(), random_params(2, rng));
  const DensityMatrix rho = run_exact_noisy(c, NoiseChannel::make(ChannelKind::BitFlip, 0.0));
  EXPECT_NEAR(output_fidelity(run_ideal(c), rho), 1.0, 1e-10);
}

TEST(RunExactNoisy, ToyDephasing) {
  const double p = 0.03;
  const DensityMatrix rho =
      run_exact_noisy(toy_identity_circuit(), NoiseChannel::make(ChannelKind::Dephasing, p));
  EXPECT_NEAR(rho(0, 0).real(), 0.5, kTol);
  EXPECT_NEAR(rho(0, 1).real(), (1 - 2 * p) / 2, kTol);
  EXPECT_NEAR(output_fidelity(StateVector::plus(1), rho), 1 - p, kTol);
}

TEST(RunExactNoisy, DepolarizingPreservesTrace) {
  Rng rng(4);
  const GateSequence c = build_circuit(table1_graph(), random_params(3, rng));
  const DensityMatrix rho = run_exact_noisy(c, NoiseChannel::make(ChannelKind::Depolarizing, 0.02));
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_LT(rho.hermiticity_residual(), 1e-12);
}

TEST(RunExactNoisy, NoiseAppliedPerTouchedQubit) {
  // A single cost gate at zero angle touches two qubits; bit flips on both
  // leave |++> invariant but dephasing on both gives (1-p)^2 fidelity.
  const double p = 0.1;
  const GateSequence c = build_circuit(WeightedGraph(2, {{0, 1, 1.0}}), QaoaParams{{0.0}, {0.0}});
  const GateSequence cost_only(2, {c.gates()[0]}, {c.tags()[0]});
  const DensityMatrix rho = run_exact_noisy(cost_only, NoiseChannel::make(ChannelKind::Dephasing, p));
  EXPECT_NEAR(output_fidelity(StateVector::plus(2), rho), (1 - p) * (1 - p), kTol);
}

TEST(RunExactNoisy, RejectsOversizedRegister) {
  const WeightedGraph g(kMaxDensityQubits + 1, {{0, 1, 1.0}});
  EXPECT_THROW(run_exact_noisy(build_circuit(g, QaoaParams{{0.1}, {0.1}}),
                               NoiseChannel::make(ChannelKind::BitFlip, 0.1)),
               SizeError);
}

TEST(RunTrajectory, NoiselessMatchesIdeal) {
  Rng rng(6);
  const GateSequence c = build_circuit(table1_graph(), random_params(2, rng));
  const StateVector ideal = run_ideal(c);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng traj(seed);
    const StateVector s = run_trajectory(c, NoiseChannel::make(ChannelKind::Depolarizing, 0.0), traj);
    for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_LT(std::abs(s[i] - ideal[i]), 1e-12);
  }
}

TEST(RunTrajectory, ToyDephasingBranchStatistics) {
  const double p = 0.2;
  const int runs = 20000;
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Dephasing, p);
  const StateVector minus = StateVector::from_amplitudes({kInvSqrt2, -kInvSqrt2});
  Rng rng(123);
  int flips = 0;
  for (int r = 0; r < runs; ++r)
    if (pure_fidelity(run_trajectory(toy_identity_circuit(), ch, rng), minus) > 0.5) ++flips;
  const double sigma = std::sqrt(p * (1 - p) / runs);
  EXPECT_NEAR(static_cast<double>(flips) / runs, p, 3 * sigma);
}

TEST(RunTrajectory, FixedSeedReproducible) {
  Rng init(5);
  const GateSequence c = build_circuit(table1_graph(), random_params(3, init));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.05);
  Rng a(42), b(42);
  const StateVector sa = run_trajectory(c, ch, a);
  const StateVector sb = run_trajectory(c, ch, b);
  for (std::size_t i = 0; i < sa.dimension(); ++i) EXPECT_EQ(sa[i], sb[i]);
}

TEST(OutputFidelity, Examples) {
  Rng rng(8);
  const StateVector s = run_ideal(build_circuit(table1_graph(), random_params(1, rng)));
  EXPECT_NEAR(output_fidelity(s, DensityMatrix::from_pure(s)), 1.0, 1e-12);
  EXPECT_NEAR(output_fidelity(s, DensityMatrix::maximally_mixed(7)), 1.0 / 128, 1e-12);
  EXPECT_THROW(output_fidelity(s, DensityMatrix::maximally_mixed(3)), SizeError);
}

TEST(TrajectoryMeanCost, AgreesWithExactNoisy) {
  Rng rng(15);
  const WeightedGraph g(4, {{0, 1, 0.8}, {1, 2, 0.6}, {2, 3, 1.0}, {0, 3, 0.5}});
  const ProblemHamiltonian h = problem_hamiltonian(g);
  const GateSequence c = build_circuit(g, random_params(2, rng));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.05);
  const TrajectoryEstimate est = trajectory_mean_cost(c, h, ch, 4000, 99);
  EXPECT_NEAR(est.mean, cost_exact(c, h, ch), 4 * est.std_error + 1e-12);
  EXPECT_GT(est.std_error, 0.0);
}

TEST(TrajectoryFidelity, AgreesWithExactNoisy) {
  Rng rng(16);
  const GateSequence c = build_circuit(table1_graph(), random_params(1, rng));
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::BitFlip, 0.01);
  const TrajectoryEstimate est = trajectory_fidelity(c, ch, 2000, 5);
  EXPECT_NEAR(est.mean, output_fidelity(run_ideal(c), run_exact_noisy(c, ch)), 4 * est.std_error);
}

TEST(CostSampled, DeterministicStateIsExact) {
  const Mat2 h = {Complex{kInvSqrt2}, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  const GateSequence to_zero(2, {GateOp::single(0, h), GateOp::single(1, h)}, {mixer_tag(0), mixer_tag(1)});
  const ProblemHamiltonian ham = problem_hamiltonian(WeightedGraph(2, {{0, 1, 0.9}}));
  for (std::size_t shots : {1, 7, 100}) {
    const SampledCost s =
        cost_sampled(to_zero, ham, NoiseChannel::make(ChannelKind::Dephasing, 0.0), shots, 3);
    EXPECT_NEAR(s.estimate, 0.9, kTol);
    ASSERT_EQ(s.agreement.size(), 1U);
    EXPECT_NEAR(s.agreement[0], 1.0, kTol);
  }
}

TEST(CostSampled, UniformStateNearZero) {
  const WeightedGraph g = table1_graph();
  const ProblemHamiltonian h = problem_hamiltonian(g);
  const GateSequence c = build_circuit(g, QaoaParams{{0.0}, {0.0}});
  const SampledCost s = cost_sampled(c, h, NoiseChannel::make(ChannelKind::BitFlip, 0.0), 2000, 11);
  for (double pij : s.agreement) EXPECT_NEAR(pij, 0.5, 4 * std::sqrt(0.25 / 2000));
  EXPECT_NEAR(s.estimate, 0.0, 2 * ci_cost(2000, g));
}

TEST(CostSampled, SameSeedSameEstimate) {
  const WeightedGraph g = table1_graph();
  const ProblemHamiltonian h = problem_hamiltonian(g);
  const GateSequence c = build_circuit(g, QaoaParams{{0.4}, {0.3}});
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.01);
  EXPECT_EQ(cost_sampled(c, h, ch, 50, 8).estimate, cost_sampled(c, h, ch, 50, 8).estimate);
  EXPECT_THROW(cost_sampled(c, h, ch, 0, 8), ValidationError);
}

}  // namespace
}  // namespace nqaoa
