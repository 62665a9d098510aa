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

#include "nqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

void QaoaParams::validate() const {
  if (gamma.size() != beta.size())
    throw ValidationError("gamma and beta must have the same length");
  if (gamma.empty()) throw ValidationError("QAOA needs at least one step");
  for (double v : gamma)
    if (!std::isfinite(v)) throw ValidationError("non-finite gamma entry");
  for (double v : beta)
    if (!std::isfinite(v)) throw ValidationError("non-finite beta entry");
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> out(gamma);
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

QaoaParams QaoaParams::from_flat(std::span<const double> values) {
  if (values.size() % 2 != 0) throw ValidationError("flat parameter vector must have even length");
  const std::size_t n = values.size() / 2;
  QaoaParams p{{values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n)},
               {values.begin() + static_cast<std::ptrdiff_t>(n), values.end()}};
  p.validate();
  return p;
}

GateOp cost_gate(std::size_t q0, std::size_t q1, double angle) {
  const Complex minus = std::polar(1.0, -angle);
  const Complex plus = std::polar(1.0, angle);
  Mat4 u{};
  u[0] = minus;
  u[5] = plus;
  u[10] = plus;
  u[15] = minus;
  return GateOp::two(q0, q1, u);
}

GateOp mixer_gate(std::size_t q, double angle) {
  const double c = std::cos(angle);
  const Complex s = kI * std::sin(angle);
  return GateOp::single(q, {c, s, s, c});
}

GateOp make_gate(const GateTag& tag) {
  return tag.role == GateRole::Cost ? cost_gate(tag.q0, tag.q1, tag.angle)
                                    : mixer_gate(tag.q0, tag.angle);
}

GateSequence::GateSequence(std::size_t num_qubits, std::vector<GateOp> gates,
                           std::vector<GateTag> tags)
    : num_qubits_(num_qubits), gates_(std::move(gates)), tags_(std::move(tags)) {
  if (gates_.size() != tags_.size()) throw ValidationError("gate/tag count mismatch");
  for (const GateOp& g : gates_)
    if (g.max_target() >= num_qubits_) throw ValidationError("gate target out of range");
}

GateSequence GateSequence::with_angle(std::size_t index, double angle) const {
  GateSequence copy = *this;
  copy.tags_.at(index).angle = angle;
  copy.gates_[index] = make_gate(copy.tags_[index]);
  return copy;
}

GateSequence build_circuit(const WeightedGraph& graph, const QaoaParams& params) {
  params.validate();
  const std::size_t m = graph.num_nodes();
  std::vector<GateOp> gates;
  std::vector<GateTag> tags;
  const std::size_t per_step = graph.num_edges() + m;
  gates.reserve(params.steps() * per_step);
  tags.reserve(params.steps() * per_step);
  for (std::size_t k = 0; k < params.steps(); ++k) {
    for (const Edge& e : graph.edges()) {
      tags.push_back({GateRole::Cost, k, e.i, e.j, e.weight, params.gamma[k] * e.weight});
      gates.push_back(make_gate(tags.back()));
    }
    for (std::size_t q = 0; q < m; ++q) {
      tags.push_back({GateRole::Mixer, k, q, q, 1.0, params.beta[k]});
      gates.push_back(make_gate(tags.back()));
    }
  }
  return GateSequence(m, std::move(gates), std::move(tags));
}

StateVector run_ideal(const GateSequence& circuit) {
  StateVector state = StateVector::plus(circuit.num_qubits());
  for (const GateOp& g : circuit.gates()) state.apply(g);
  return state;
}

DensityMatrix run_exact_noisy(const GateSequence& circuit, const NoiseChannel& channel) {
  if (circuit.num_qubits() > kMaxDensityQubits)
    throw SizeError("exact noisy simulation limited to 12 qubits");
  DensityMatrix rho = DensityMatrix::from_pure(StateVector::plus(circuit.num_qubits()));
  for (const GateOp& g : circuit.gates()) {
    rho.apply(g);
    for (std::size_t q : g.targets()) rho.apply_channel(channel, q);
  }
  return rho;
}

StateVector run_trajectory(const GateSequence& circuit, const NoiseChannel& channel, Rng& rng) {
  StateVector state = StateVector::plus(circuit.num_qubits());
  for (const GateOp& g : circuit.gates()) {
    state.apply(g);
    for (std::size_t q : g.targets()) sample_kraus_in_place(state, channel, q, rng.uniform());
  }
  return state;
}

double output_fidelity(const StateVector& ideal, const DensityMatrix& noisy) {
  if (ideal.num_qubits() != noisy.num_qubits()) throw SizeError("fidelity dimension mismatch");
  const std::size_t dim = ideal.dimension();
  Complex f{};
  for (std::size_t r = 0; r < dim; ++r) {
    Complex row{};
    for (std::size_t c = 0; c < dim; ++c) row += noisy(r, c) * ideal[c];
    f += std::conj(ideal[r]) * row;
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

double cost_exact(const GateSequence& circuit, const ProblemHamiltonian& h) {
  return exact_expectation(run_ideal(circuit), h);
}

double cost_exact(const GateSequence& circuit, const ProblemHamiltonian& h,
                  const NoiseChannel& channel) {
  return exact_expectation(run_exact_noisy(circuit, channel), h);
}

SampledCost cost_sampled(const GateSequence& circuit, const ProblemHamiltonian& h,
                         const NoiseChannel& channel, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shot count must be at least 1");
  if (h.num_qubits() != circuit.num_qubits()) throw SizeError("circuit/Hamiltonian size mismatch");
  SampledCost out{0.0, {}};
  out.agreement.reserve(h.terms().size());
  for (std::size_t t = 0; t < h.terms().size(); ++t) {
    const ZZTerm& term = h.terms()[t];
    std::size_t agree = 0;
    for (std::size_t s = 0; s < shots; ++s) {
      Rng rng(derive_seed(seed, {t, s}));
      const StateVector state = run_trajectory(circuit, channel, rng);
      const auto probs = measurement_probabilities(state, term.i, term.j);
      const double r = rng.uniform();
      // outcome order 00, 01, 10, 11
      double cumulative = 0.0;
      std::size_t outcome = 3;
      for (std::size_t o = 0; o < 4; ++o) {
        cumulative += probs[o];
        if (r < cumulative) {
          outcome = o;
          break;
        }
      }
      if (outcome == 0 || outcome == 3) ++agree;
    }
    const double p = static_cast<double>(agree) / static_cast<double>(shots);
    out.agreement.push_back(p);
    out.estimate += term.coefficient * (2.0 * p - 1.0);
  }
  return out;
}

namespace {

template <typename Sample>
TrajectoryEstimate trajectory_mean(std::size_t trajectories, std::uint64_t seed, Sample sample) {
  if (trajectories == 0) throw ValidationError("trajectory count must be at least 1");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trajectories; ++t) {
    Rng rng(derive_seed(seed, {t}));
    const double v = sample(rng);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(trajectories);
  const double mean = sum / n;
  const double var = trajectories > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace

TrajectoryEstimate trajectory_mean_cost(const GateSequence& circuit, const ProblemHamiltonian& h,
                                        const NoiseChannel& channel, std::size_t trajectories,
                                        std::uint64_t seed) {
  return trajectory_mean(trajectories, seed, [&](Rng& rng) {
    return exact_expectation(run_trajectory(circuit, channel, rng), h);
  });
}

TrajectoryEstimate trajectory_fidelity(const GateSequence& circuit, const NoiseChannel& channel,
                                       std::size_t trajectories, std::uint64_t seed) {
  const StateVector ideal = run_ideal(circuit);
  return trajectory_mean(trajectories, seed, [&](Rng& rng) {
    return pure_fidelity(ideal, run_trajectory(circuit, channel, rng));
  });
}

}  // namespace nqaoa
