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

#include "nqaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

void check_qubit_count(std::size_t m, std::size_t limit) {
  if (m < 1 || m > limit) {
    std::ostringstream msg;
    msg << "qubit count " << m << " outside supported range [1, " << limit << "]";
    throw SizeError(msg.str());
  }
}

void check_targets(const GateOp& gate, std::size_t m) {
  if (gate.max_target() >= m) {
    std::ostringstream msg;
    msg << "gate target " << gate.max_target() << " out of range for " << m << " qubits";
    throw ValidationError(msg.str());
  }
}

void check_qubit(std::size_t qubit, std::size_t m) {
  if (qubit >= m) {
    std::ostringstream msg;
    msg << "qubit index " << qubit << " out of range for " << m << " qubits";
    throw ValidationError(msg.str());
  }
}

std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return (std::size_t{1} << k) == n ? k : 0;
}

}  // namespace

// --- GateOp ---------------------------------------------------------------

GateOp GateOp::single(std::size_t target, const Mat2& matrix) {
  if (unitarity_residual(matrix) > kUnitaryTolerance)
    throw ValidationError("single-qubit gate matrix is not unitary");
  GateOp g;
  g.kind_ = GateKind::Single;
  g.targets_ = {target, target};
  g.single_ = matrix;
  g.diagonal_ = matrix[1] == Complex{} && matrix[2] == Complex{};
  return g;
}

GateOp GateOp::two(std::size_t target0, std::size_t target1, const Mat4& matrix) {
  if (target0 == target1) throw ValidationError("two-qubit gate targets must be distinct");
  if (unitarity_residual(matrix) > kUnitaryTolerance)
    throw ValidationError("two-qubit gate matrix is not unitary");
  GateOp g;
  g.kind_ = GateKind::Two;
  g.targets_ = {target0, target1};
  g.two_ = matrix;
  g.diagonal_ = nqaoa::is_diagonal(matrix);
  return g;
}

std::size_t GateOp::max_target() const {
  return kind_ == GateKind::Single ? targets_[0] : std::max(targets_[0], targets_[1]);
}

// --- StateVector ----------------------------------------------------------

StateVector StateVector::plus(std::size_t num_qubits) {
  check_qubit_count(num_qubits, kMaxStateQubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
  return StateVector(num_qubits, std::vector<Complex>(dim, Complex{amp, 0.0}));
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits, kMaxStateQubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw ValidationError("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t m = log2_exact(amplitudes.size());
  if (m == 0) throw SizeError("amplitude count must be a power of two >= 2");
  check_qubit_count(m, kMaxStateQubits);
  StateVector s(m, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > kNormTolerance)
    throw ValidationError("amplitudes are not normalised");
  return s;
}

void StateVector::apply(const GateOp& gate) {
  check_targets(gate, num_qubits_);
  if (gate.kind() == GateKind::Single) {
    kernels::apply_1q(amps_, gate.targets()[0], gate.single_matrix());
  } else if (gate.is_diagonal()) {
    const Mat4& u = gate.two_matrix();
    kernels::apply_diag_2q(amps_, gate.targets()[0], gate.targets()[1], {u[0], u[5], u[10], u[15]});
  } else {
    kernels::apply_2q(amps_, gate.targets()[0], gate.targets()[1], gate.two_matrix());
  }
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::renormalize() {
  const double n = norm();
  if (!(n > 0.0)) throw SimulationError("cannot renormalise a zero state");
  const double inv = 1.0 / n;
  for (Complex& a : amps_) a *= inv;
}

StateVector apply_gate(StateVector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

// --- DensityMatrix --------------------------------------------------------

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
  check_qubit_count(state.num_qubits(), kMaxDensityQubits);
  const std::size_t dim = state.dimension();
  std::vector<Complex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) entries[c + r * dim] = state[r] * std::conj(state[c]);
  return DensityMatrix(state.num_qubits(), std::move(entries));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  check_qubit_count(num_qubits, kMaxDensityQubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Complex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) entries[r + r * dim] = 1.0 / static_cast<double>(dim);
  return DensityMatrix(num_qubits, std::move(entries));
}

DensityMatrix DensityMatrix::from_entries(std::size_t num_qubits, std::vector<Complex> entries) {
  check_qubit_count(num_qubits, kMaxDensityQubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (entries.size() != dim * dim) throw SizeError("density matrix entry count mismatch");
  DensityMatrix rho(num_qubits, std::move(entries));
  if (rho.hermiticity_residual() > kNormTolerance)
    throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kNormTolerance)
    throw ValidationError("density matrix trace is not 1");
  return rho;
}

void DensityMatrix::apply(const GateOp& gate) {
  check_targets(gate, num_qubits_);
  detail::conjugate_by_gate(entries_, num_qubits_, gate, false);
}

namespace detail {

void conjugate_by_gate(std::span<Complex> op, std::size_t m, const GateOp& gate,
                       bool heisenberg) {
  // op -> A op B: rows (high bits) see A, columns (low bits) see B^T.
  // Forward: A = U, B^T = conj(U). Heisenberg: A = U^dagger, B^T = U^T.
  if (gate.kind() == GateKind::Single) {
    const std::size_t q = gate.targets()[0];
    const Mat2& u = gate.single_matrix();
    const Mat2 rows = heisenberg ? adjoint(u) : u;
    const Mat2 cols = conjugate(rows);
    kernels::apply_2q(op, q, q + m, kron(rows, cols));
    return;
  }
  const std::size_t q0 = gate.targets()[0];
  const std::size_t q1 = gate.targets()[1];
  const Mat4& u = gate.two_matrix();
  if (gate.is_diagonal()) {
    std::array<Complex, 4> d = {u[0], u[5], u[10], u[15]};
    if (heisenberg)
      for (Complex& v : d) v = std::conj(v);
    const std::size_t dim = std::size_t{1} << m;
    std::vector<Complex> col_phase(dim);
    for (std::size_t c = 0; c < dim; ++c)
      col_phase[c] = std::conj(d[((c >> q0) & 1U) | (((c >> q1) & 1U) << 1)]);
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex dr = d[((r >> q0) & 1U) | (((r >> q1) & 1U) << 1)];
      Complex* row = op.data() + r * dim;
      for (std::size_t c = 0; c < dim; ++c) row[c] *= dr * col_phase[c];
    }
    return;
  }
  const Mat4 rows = heisenberg ? adjoint(u) : u;
  kernels::apply_2q(op, q0 + m, q1 + m, rows);
  kernels::apply_2q(op, q0, q1, conjugate(rows));
}

}  // namespace detail

void DensityMatrix::apply_channel(const NoiseChannel& channel, std::size_t qubit) {
  apply_superoperator(channel.superoperator(), qubit);
}

void DensityMatrix::apply_superoperator(const Mat4& super, std::size_t qubit) {
  check_qubit(qubit, num_qubits_);
  kernels::apply_2q(entries_, qubit, qubit + num_qubits_, super);
}

Complex DensityMatrix::trace() const {
  Complex t{};
  const std::size_t dim = dimension();
  for (std::size_t i = 0; i < dim; ++i) t += entries_[i + i * dim];
  return t;
}

double DensityMatrix::hermiticity_residual() const {
  const std::size_t dim = dimension();
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c)
      worst = std::max(worst, std::abs(entries_[c + r * dim] - std::conj(entries_[r + c * dim])));
  return worst;
}

Complex DensityMatrix::trace_with(const DensityMatrix& op) const {
  if (op.num_qubits_ != num_qubits_) throw SizeError("dimension mismatch in trace_with");
  const std::size_t dim = dimension();
  Complex t{};
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) t += op.entries_[c + r * dim] * entries_[r + c * dim];
  return t;
}

DensityMatrix apply_kraus_exact(DensityMatrix rho, const NoiseChannel& channel, std::size_t qubit) {
  rho.apply_channel(channel, qubit);
  return rho;
}

// --- Trajectory sampling --------------------------------------------------

namespace {

// Reduced single-qubit density matrix of `qubit`, row-major.
Mat2 reduced_qubit_state(std::span<const Complex> amps, std::size_t qubit) {
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  const std::uint64_t lo = mask - 1;
  Mat2 r{};
  for (std::uint64_t k = 0; k < amps.size() / 2; ++k) {
    const std::uint64_t i0 = ((k & ~lo) << 1) | (k & lo);
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i0 | mask];
    r[0] += a0 * std::conj(a0);
    r[1] += a0 * std::conj(a1);
    r[2] += a1 * std::conj(a0);
    r[3] += a1 * std::conj(a1);
  }
  return r;
}

double branch_weight(const Mat2& k, const Mat2& reduced) {
  // Tr(K rho K^dagger)
  const Mat2 kr = multiply(multiply(k, reduced), adjoint(k));
  return std::max(0.0, (kr[0] + kr[3]).real());
}

}  // namespace

std::vector<double> kraus_branch_weights(const StateVector& state, const NoiseChannel& channel,
                                         std::size_t qubit) {
  check_qubit(qubit, state.num_qubits());
  const Mat2 reduced = reduced_qubit_state(state.amplitudes(), qubit);
  std::vector<double> w;
  w.reserve(channel.branch_count());
  for (const Mat2& k : channel.kraus()) w.push_back(branch_weight(k, reduced));
  return w;
}

std::size_t sample_kraus_in_place(StateVector& state, const NoiseChannel& channel,
                                  std::size_t qubit, double r) {
  check_qubit(qubit, state.num_qubits());
  const auto kraus = channel.kraus();
  const Mat2 reduced = reduced_qubit_state(state.amplitudes(), qubit);

  std::array<double, 8> small{};
  std::vector<double> large;
  double* weights = small.data();
  if (kraus.size() > small.size()) {
    large.resize(kraus.size());
    weights = large.data();
  }
  double total = 0.0;
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    weights[i] = branch_weight(kraus[i], reduced);
    total += weights[i];
  }
  if (!(total > 1e-300)) throw SimulationError("all Kraus branch weights vanish");

  std::size_t chosen = kraus.size();
  std::size_t last_nonzero = 0;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_nonzero = i;
    cumulative += weights[i];
    if (r < cumulative) {
      chosen = i;
      break;
    }
  }
  // r beyond the accumulated mass (rounding): take the last live branch.
  if (chosen == kraus.size()) chosen = last_nonzero;

  // K_l |phi> / sqrt(p_l); dividing by the computed norm also removes drift.
  kernels::apply_1q(state.mutable_amplitudes(), qubit, kraus[chosen]);
  state.renormalize();
  return chosen;
}

KrausSample sample_kraus(StateVector state, const NoiseChannel& channel, std::size_t qubit,
                         double r) {
  const std::size_t l = sample_kraus_in_place(state, channel, qubit, r);
  return {std::move(state), l};
}

// --- Measurements ---------------------------------------------------------

double pure_fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw SizeError("fidelity of states with different sizes");
  Complex overlap{};
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

namespace {

void check_pair(std::size_t qa, std::size_t qb, std::size_t m) {
  if (qa == qb) throw ValidationError("measurement qubits must be distinct");
  check_qubit(qa, m);
  check_qubit(qb, m);
}

template <typename Weight>
std::array<double, 4> marginal(std::size_t dim, std::size_t qa, std::size_t qb, Weight weight) {
  std::array<double, 4> p{};
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t label = (((i >> qa) & 1U) << 1) | ((i >> qb) & 1U);
    p[label] += weight(i);
  }
  double total = p[0] + p[1] + p[2] + p[3];
  for (double& v : p) v = std::max(0.0, v) / total;
  return p;
}

}  // namespace

std::array<double, 4> measurement_probabilities(const StateVector& state, std::size_t qa,
                                                std::size_t qb) {
  check_pair(qa, qb, state.num_qubits());
  return marginal(state.dimension(), qa, qb, [&](std::size_t i) { return std::norm(state[i]); });
}

std::array<double, 4> measurement_probabilities(const DensityMatrix& rho, std::size_t qa,
                                                std::size_t qb) {
  check_pair(qa, qb, rho.num_qubits());
  return marginal(rho.dimension(), qa, qb, [&](std::size_t i) { return rho(i, i).real(); });
}

}  // namespace nqaoa
