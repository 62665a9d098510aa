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

#include "nqaoa/gradopt.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

namespace {

constexpr double kShift = std::numbers::pi / 4.0;

}  // namespace

// --- Evaluator ------------------------------------------------------------

Evaluator Evaluator::ideal() { return Evaluator(EvaluatorKind::ExactIdeal, std::nullopt, 0, 0); }

Evaluator Evaluator::exact_noisy(NoiseChannel channel) {
  return Evaluator(EvaluatorKind::ExactNoisy, std::move(channel), 0, 0);
}

Evaluator Evaluator::sampled(NoiseChannel channel, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("sampled evaluator needs at least one shot");
  return Evaluator(EvaluatorKind::Sampled, std::move(channel), shots, seed);
}

bool Evaluator::is_noiseless_exact() const {
  return kind_ == EvaluatorKind::ExactIdeal ||
         (kind_ == EvaluatorKind::ExactNoisy && channel_->is_noiseless());
}

Evaluator Evaluator::substream(std::uint64_t stream) const {
  Evaluator e = *this;
  e.seed_ = derive_seed(seed_, {stream});
  return e;
}

double Evaluator::cost(const GateSequence& circuit, const ProblemHamiltonian& h) const {
  if (is_noiseless_exact()) return cost_exact(circuit, h);
  if (kind_ == EvaluatorKind::ExactNoisy) return cost_exact(circuit, h, *channel_);
  return cost_sampled(circuit, h, *channel_, shots_, seed_).estimate;
}

// --- Gradient -------------------------------------------------------------

double Gradient::norm() const {
  double s = 0.0;
  for (double v : d_gamma) s += v * v;
  for (double v : d_beta) s += v * v;
  return std::sqrt(s);
}

std::vector<double> Gradient::flatten() const {
  std::vector<double> out(d_gamma);
  out.insert(out.end(), d_beta.begin(), d_beta.end());
  return out;
}

namespace {

struct ShiftPair {
  double plus;
  double minus;
};

Gradient assemble(const GateSequence& circuit, std::size_t steps,
                  const std::vector<ShiftPair>& shifts) {
  Gradient g{std::vector<double>(steps, 0.0), std::vector<double>(steps, 0.0)};
  for (std::size_t k = 0; k < circuit.gate_count(); ++k) {
    const GateTag& tag = circuit.tags()[k];
    const double diff = shifts[k].plus - shifts[k].minus;
    if (tag.role == GateRole::Cost) {
      g.d_gamma[tag.step] += tag.weight * diff;
    } else {
      g.d_beta[tag.step] += diff;
    }
  }
  return g;
}

GateOp shifted_gate(const GateTag& tag, double delta) {
  GateTag t = tag;
  t.angle += delta;
  return make_gate(t);
}

// Prefix states are cached; each shifted cost re-runs only the suffix.
CostAndGradient ideal_cost_and_gradient(const GateSequence& circuit, const ProblemHamiltonian& h,
                                        std::size_t steps) {
  const std::size_t n_gates = circuit.gate_count();
  std::vector<StateVector> prefix;
  prefix.reserve(n_gates);
  StateVector state = StateVector::plus(circuit.num_qubits());
  for (const GateOp& g : circuit.gates()) {
    prefix.push_back(state);
    state.apply(g);
  }
  const double cost = exact_expectation(state, h);

  std::vector<ShiftPair> shifts(n_gates);
  for (std::size_t k = 0; k < n_gates; ++k) {
    auto run_from = [&](double delta) {
      StateVector s = prefix[k];
      s.apply(shifted_gate(circuit.tags()[k], delta));
      for (std::size_t j = k + 1; j < n_gates; ++j) s.apply(circuit.gates()[j]);
      return exact_expectation(s, h);
    };
    shifts[k] = {run_from(kShift), run_from(-kShift)};
  }
  return {cost, assemble(circuit, steps, shifts)};
}

double trace_product(std::span<const Complex> op, std::span<const Complex> rho) {
  // Tr(O rho) = sum_{r,c} O[r,c] rho[c,r] = sum O[r,c] conj(rho[r,c]) for Hermitian rho.
  double t = 0.0;
  for (std::size_t i = 0; i < op.size(); ++i)
    t += op[i].real() * rho[i].real() + op[i].imag() * rho[i].imag();
  return t;
}

// Forward pass caches rho before every gate; the backward pass carries the
// observable H evolved through the adjoint of the remaining circuit, so a
// shifted cost is Tr(O_after_k * N_k(G'_k rho_k G'_k^dagger)).
CostAndGradient noisy_cost_and_gradient(const GateSequence& circuit, const ProblemHamiltonian& h,
                                        const NoiseChannel& channel, std::size_t steps) {
  const std::size_t m = circuit.num_qubits();
  if (m > kMaxDensityQubits) throw SizeError("exact noisy simulation limited to 12 qubits");
  const std::size_t n_gates = circuit.gate_count();

  std::vector<DensityMatrix> prefix;
  prefix.reserve(n_gates);
  DensityMatrix rho = DensityMatrix::from_pure(StateVector::plus(m));
  for (const GateOp& g : circuit.gates()) {
    prefix.push_back(rho);
    rho.apply(g);
    for (std::size_t q : g.targets()) rho.apply_channel(channel, q);
  }
  const double cost = exact_expectation(rho, h);

  const std::size_t dim = std::size_t{1} << m;
  std::vector<Complex> observable(dim * dim);
  const std::vector<double> energies = h.diagonal();
  for (std::size_t z = 0; z < dim; ++z) observable[z + z * dim] = energies[z];

  std::vector<ShiftPair> shifts(n_gates);
  for (std::size_t k = n_gates; k-- > 0;) {
    const GateOp& gate = circuit.gates()[k];
    auto shifted_cost = [&](double delta) {
      DensityMatrix r = prefix[k];
      r.apply(shifted_gate(circuit.tags()[k], delta));
      for (std::size_t q : gate.targets()) r.apply_channel(channel, q);
      return trace_product(observable, r.entries());
    };
    shifts[k] = {shifted_cost(kShift), shifted_cost(-kShift)};

    if (k == 0) break;
    for (std::size_t q : gate.targets())
      kernels::apply_2q(observable, q, q + m, channel.adjoint_superoperator());
    detail::conjugate_by_gate(observable, m, gate, true);
  }
  return {cost, assemble(circuit, steps, shifts)};
}

CostAndGradient sampled_cost_and_gradient(const GateSequence& circuit, const ProblemHamiltonian& h,
                                          const Evaluator& evaluator, std::size_t steps) {
  const std::size_t n_gates = circuit.gate_count();
  std::vector<ShiftPair> shifts(n_gates);
  for (std::size_t k = 0; k < n_gates; ++k) {
    const GateTag& tag = circuit.tags()[k];
    shifts[k].plus = evaluator.substream(2 * k).cost(circuit.with_angle(k, tag.angle + kShift), h);
    shifts[k].minus =
        evaluator.substream(2 * k + 1).cost(circuit.with_angle(k, tag.angle - kShift), h);
  }
  const double cost = evaluator.substream(2 * n_gates).cost(circuit, h);
  return {cost, assemble(circuit, steps, shifts)};
}

}  // namespace

CostAndGradient shift_rule_cost_and_gradient(const WeightedGraph& graph, const QaoaParams& params,
                                             const Evaluator& evaluator) {
  const GateSequence circuit = build_circuit(graph, params);
  const ProblemHamiltonian h = problem_hamiltonian(graph);
  if (evaluator.is_noiseless_exact()) return ideal_cost_and_gradient(circuit, h, params.steps());
  if (evaluator.kind() == EvaluatorKind::ExactNoisy)
    return noisy_cost_and_gradient(circuit, h, *evaluator.channel(), params.steps());
  return sampled_cost_and_gradient(circuit, h, evaluator, params.steps());
}

Gradient shift_rule_gradient(const WeightedGraph& graph, const QaoaParams& params,
                             const Evaluator& evaluator) {
  return shift_rule_cost_and_gradient(graph, params, evaluator).gradient;
}

Gradient detail::shift_rule_gradient_full_rerun(const WeightedGraph& graph,
                                                const QaoaParams& params,
                                                const Evaluator& evaluator) {
  const GateSequence circuit = build_circuit(graph, params);
  const ProblemHamiltonian h = problem_hamiltonian(graph);
  std::vector<ShiftPair> shifts(circuit.gate_count());
  for (std::size_t k = 0; k < circuit.gate_count(); ++k) {
    const double angle = circuit.tags()[k].angle;
    shifts[k].plus = evaluator.substream(2 * k).cost(circuit.with_angle(k, angle + kShift), h);
    shifts[k].minus = evaluator.substream(2 * k + 1).cost(circuit.with_angle(k, angle - kShift), h);
  }
  return assemble(circuit, params.steps(), shifts);
}

Gradient finite_difference_gradient(const WeightedGraph& graph, const QaoaParams& params,
                                    double h) {
  if (!(h > 0.0)) throw ValidationError("finite-difference step must be positive");
  params.validate();
  const ProblemHamiltonian ham = problem_hamiltonian(graph);
  std::vector<double> flat = params.flatten();
  std::vector<double> grad(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const double saved = flat[i];
    flat[i] = saved + h;
    const double up = cost_exact(build_circuit(graph, QaoaParams::from_flat(flat)), ham);
    flat[i] = saved - h;
    const double down = cost_exact(build_circuit(graph, QaoaParams::from_flat(flat)), ham);
    flat[i] = saved;
    grad[i] = (up - down) / (2.0 * h);
  }
  const std::size_t n = params.steps();
  return {{grad.begin(), grad.begin() + static_cast<std::ptrdiff_t>(n)},
          {grad.begin() + static_cast<std::ptrdiff_t>(n), grad.end()}};
}

// --- Optimisation ---------------------------------------------------------

std::size_t OptimizationTrace::max_gradient_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < iterations.size(); ++i)
    if (iterations[i].gradient_norm > iterations[best].gradient_norm) best = i;
  return best;
}

OptimizationTrace gradient_descent(const WeightedGraph& graph, const QaoaParams& init,
                                   const Evaluator& evaluator, double learning_rate,
                                   std::size_t num_iters) {
  if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
  if (num_iters < 1) throw ValidationError("iteration count must be at least 1");
  init.validate();

  OptimizationTrace trace;
  trace.learning_rate = learning_rate;
  QaoaParams params = init;
  for (std::size_t t = 0;; ++t) {
    const CostAndGradient cg = shift_rule_cost_and_gradient(graph, params, evaluator.substream(t));
    const double gnorm = cg.gradient.norm();
    if (!std::isfinite(cg.cost) || !std::isfinite(gnorm)) {
      std::ostringstream msg;
      msg << "gradient descent diverged at iteration " << t << " (cost " << cg.cost
          << ", gradient norm " << gnorm << ")";
      throw SimulationError(msg.str());
    }
    trace.iterations.push_back({params, cg.cost, gnorm});
    if (gnorm < kConvergenceGradientNorm) {
      trace.converged = true;
      break;
    }
    if (t == num_iters) break;
    for (std::size_t k = 0; k < params.steps(); ++k) {
      params.gamma[k] -= learning_rate * cg.gradient.d_gamma[k];
      params.beta[k] -= learning_rate * cg.gradient.d_beta[k];
    }
  }
  return trace;
}

QaoaParams random_init(std::size_t steps, Rng& rng) {
  if (steps < 1) throw ValidationError("QAOA needs at least one step");
  QaoaParams p{std::vector<double>(steps), std::vector<double>(steps)};
  for (double& v : p.gamma) v = rng.uniform(-0.01, 0.01);
  for (double& v : p.beta) v = rng.uniform(-0.01, 0.01);
  return p;
}

double param_distance(const QaoaParams& a, const QaoaParams& b) {
  if (a.steps() != b.steps() || a.beta.size() != b.beta.size())
    throw ValidationError("parameter vectors differ in length");
  double s = 0.0;
  for (std::size_t k = 0; k < a.steps(); ++k) {
    s += (a.gamma[k] - b.gamma[k]) * (a.gamma[k] - b.gamma[k]);
    s += (a.beta[k] - b.beta[k]) * (a.beta[k] - b.beta[k]);
  }
  return std::sqrt(s / (2.0 * static_cast<double>(a.steps())));
}

}  // namespace nqaoa
