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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nqaoa/maxcut.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/rng.hpp"
#include "nqaoa/statevector.hpp"

namespace nqaoa {

/// Angles of an n-step circuit, in radians.
struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t steps() const { return gamma.size(); }
  /// Throws ValidationError unless sizes match, n >= 1 and entries are finite.
  void validate() const;
  /// [gamma_0..gamma_{n-1}, beta_0..beta_{n-1}]
  std::vector<double> flatten() const;
  static QaoaParams from_flat(std::span<const double> values);

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

enum class GateRole { Cost, Mixer };

/// Provenance of one compiled gate.
struct GateTag {
  GateRole role;
  std::size_t step;
  std::size_t q0;
  std::size_t q1;   ///< equals q0 for mixer gates
  double weight;    ///< C_ij for cost gates, 1 for mixer gates
  double angle;     ///< gamma_k * C_ij (cost) or beta_k (mixer)
};

/// exp(-i angle Z Z) on (q0, q1).
GateOp cost_gate(std::size_t q0, std::size_t q1, double angle);
/// exp(+i angle X) on q.
GateOp mixer_gate(std::size_t q, double angle);

/// Compiled circuit: per step, one cost gate per edge in (i, j) order, then
/// one mixer gate per qubit. State preparation is implicit and not counted.
class GateSequence {
 public:
  GateSequence(std::size_t num_qubits, std::vector<GateOp> gates, std::vector<GateTag> tags);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t gate_count() const { return gates_.size(); }
  std::span<const GateOp> gates() const { return gates_; }
  std::span<const GateTag> tags() const { return tags_; }

  /// Copy with gate `index` rebuilt at generator angle `angle`.
  GateSequence with_angle(std::size_t index, double angle) const;

 private:
  std::size_t num_qubits_;
  std::vector<GateOp> gates_;
  std::vector<GateTag> tags_;
};

GateOp make_gate(const GateTag& tag);

GateSequence build_circuit(const WeightedGraph& graph, const QaoaParams& params);

/// |+>^m pushed through every gate.
StateVector run_ideal(const GateSequence& circuit);

/// Density-matrix evolution; after each gate the channel acts on every qubit
/// the gate touched. Throws SizeError above kMaxDensityQubits.
DensityMatrix run_exact_noisy(const GateSequence& circuit, const NoiseChannel& channel);

/// One Monte-Carlo trajectory: sample_kraus on each touched qubit after
/// every gate, consuming one uniform draw per application.
StateVector run_trajectory(const GateSequence& circuit, const NoiseChannel& channel, Rng& rng);

/// <phi|rho|phi>
double output_fidelity(const StateVector& ideal, const DensityMatrix& noisy);

double cost_exact(const GateSequence& circuit, const ProblemHamiltonian& h);
double cost_exact(const GateSequence& circuit, const ProblemHamiltonian& h,
                  const NoiseChannel& channel);

struct SampledCost {
  double estimate;
  /// p_ij = P(00) + P(11) for every Hamiltonian term, in term order.
  std::vector<double> agreement;
};

/// Measurement-based estimate: per term, `shots` independent trajectories,
/// each measured once on the term's two qubits. The stream for shot s of
/// term t is derive_seed(seed, {t, s}).
SampledCost cost_sampled(const GateSequence& circuit, const ProblemHamiltonian& h,
                         const NoiseChannel& channel, std::size_t shots, std::uint64_t seed);

struct TrajectoryEstimate {
  double mean;
  double std_error;  ///< sample standard deviation / sqrt(T)
};

/// Mean of the exact energy expectation over `trajectories` trajectories;
/// trajectory t uses derive_seed(seed, {t}).
TrajectoryEstimate trajectory_mean_cost(const GateSequence& circuit, const ProblemHamiltonian& h,
                                        const NoiseChannel& channel, std::size_t trajectories,
                                        std::uint64_t seed);

/// Fidelity estimated as the trajectory mean of |<ideal|traj>|^2.
TrajectoryEstimate trajectory_fidelity(const GateSequence& circuit, const NoiseChannel& channel,
                                       std::size_t trajectories, std::uint64_t seed);

}  // namespace nqaoa
