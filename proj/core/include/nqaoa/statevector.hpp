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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nqaoa/linalg.hpp"
#include "nqaoa/noise.hpp"

namespace nqaoa {

inline constexpr std::size_t kMaxStateQubits = 24;
inline constexpr std::size_t kMaxDensityQubits = 12;
inline constexpr double kNormTolerance = 1e-10;

enum class GateKind { Single, Two };

/// A unitary acting on one or two qubits. Unitarity (1e-10) and target
/// distinctness are checked at construction.
class GateOp {
 public:
  static GateOp single(std::size_t target, const Mat2& matrix);
  static GateOp two(std::size_t target0, std::size_t target1, const Mat4& matrix);

  GateKind kind() const { return kind_; }
  std::size_t arity() const { return kind_ == GateKind::Single ? 1 : 2; }
  std::span<const std::size_t> targets() const { return {targets_.data(), arity()}; }
  const Mat2& single_matrix() const { return single_; }
  const Mat4& two_matrix() const { return two_; }
  bool is_diagonal() const { return diagonal_; }
  std::size_t max_target() const;

 private:
  GateOp() = default;

  GateKind kind_ = GateKind::Single;
  std::array<std::size_t, 2> targets_{};
  Mat2 single_{};
  Mat4 two_{};
  bool diagonal_ = false;
};

/// Pure state of m qubits; qubit 0 is the least significant index bit.
class StateVector {
 public:
  /// |+>^m. Throws SizeError unless 1 <= m <= kMaxStateQubits.
  static StateVector plus(std::size_t num_qubits);
  /// Computational basis state |index>.
  static StateVector basis(std::size_t num_qubits, std::uint64_t index);
  /// Length must be a power of two >= 2 and the norm 1 within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> mutable_amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  void apply(const GateOp& gate);
  double norm() const;
  void renormalize();

 private:
  StateVector(std::size_t num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

/// Dense 2^m x 2^m density matrix, stored row-major. Row r, column c lives
/// at index c + (r << m), so the array is a 2m-qubit vector whose low m bits
/// are the column index.
class DensityMatrix {
 public:
  static DensityMatrix from_pure(const StateVector& state);
  static DensityMatrix maximally_mixed(std::size_t num_qubits);
  /// Checks shape, Hermiticity and unit trace (1e-10).
  static DensityMatrix from_entries(std::size_t num_qubits, std::vector<Complex> entries);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << num_qubits_; }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> mutable_entries() { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[col + (row << num_qubits_)];
  }

  /// rho -> U rho U^dagger
  void apply(const GateOp& gate);
  /// rho -> sum_i (K_i on `qubit`) rho (K_i on `qubit`)^dagger
  void apply_channel(const NoiseChannel& channel, std::size_t qubit);
  /// Applies a single-qubit superoperator in NoiseChannel::superoperator()
  /// layout.
  void apply_superoperator(const Mat4& super, std::size_t qubit);

  Complex trace() const;
  /// Max |rho - rho^dagger| entry.
  double hermiticity_residual() const;
  /// Tr(op * rho) for a dense operator in the same layout.
  Complex trace_with(const DensityMatrix& op) const;

 private:
  DensityMatrix(std::size_t num_qubits, std::vector<Complex> entries)
      : num_qubits_(num_qubits), entries_(std::move(entries)) {}

  std::size_t num_qubits_;
  std::vector<Complex> entries_;
};

namespace detail {

/// In-place op -> U op U^dagger on a dense operator in DensityMatrix layout,
/// or op -> U^dagger op U when `heisenberg` is set.
void conjugate_by_gate(std::span<Complex> op, std::size_t num_qubits, const GateOp& gate,
                       bool heisenberg);

}  // namespace detail

/// Value-returning gate application; norm is preserved within 1e-10.
StateVector apply_gate(StateVector state, const GateOp& gate);

/// Exact channel application on one qubit of a density matrix.
DensityMatrix apply_kraus_exact(DensityMatrix rho, const NoiseChannel& channel, std::size_t qubit);

struct KrausSample {
  StateVector state;
  std::size_t branch;  ///< zero-based index into channel.kraus()
};

/// One Monte-Carlo step of the trajectory method. Branch weights are
/// p_i = <phi|K_i^dagger K_i|phi>; branch l is the first with r < sum_{i<=l} p_i.
/// The chosen branch is applied and the state renormalised.
KrausSample sample_kraus(StateVector state, const NoiseChannel& channel, std::size_t qubit,
                         double r);

/// In-place variant used by trajectory loops; returns the chosen branch.
std::size_t sample_kraus_in_place(StateVector& state, const NoiseChannel& channel,
                                  std::size_t qubit, double r);

/// Branch weights p_i for a channel acting on `qubit` of `state`.
std::vector<double> kraus_branch_weights(const StateVector& state, const NoiseChannel& channel,
                                         std::size_t qubit);

double pure_fidelity(const StateVector& a, const StateVector& b);

/// Marginal (p00, p01, p10, p11) over qubits (qa, qb); the label "xy" means
/// qubit qa reads x and qubit qb reads y.
std::array<double, 4> measurement_probabilities(const StateVector& state, std::size_t qa,
                                                std::size_t qb);
std::array<double, 4> measurement_probabilities(const DensityMatrix& rho, std::size_t qa,
                                                std::size_t qb);

}  // namespace nqaoa
