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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace nqaoa {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 complex matrix. For two-qubit operators the local basis
/// index is bit(t0) + 2 * bit(t1) where t0, t1 are the target qubits.
using Mat4 = std::array<Complex, 16>;

inline constexpr Complex kI{0.0, 1.0};

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

Mat2 scaled(const Mat2& m, Complex s);
Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& m);
Mat2 conjugate(const Mat2& m);
Mat4 multiply(const Mat4& a, const Mat4& b);
Mat4 adjoint(const Mat4& m);
Mat4 conjugate(const Mat4& m);

/// kron(hi, lo) with `hi` acting on local bit 1 and `lo` on local bit 0.
Mat4 kron(const Mat2& hi, const Mat2& lo);

/// Largest entry magnitude of (m^dagger m - I).
double unitarity_residual(const Mat2& m);
double unitarity_residual(const Mat4& m);

bool is_diagonal(const Mat4& m);

namespace kernels {

// In-place kernels over a dense amplitude array of length 2^k. Qubit q
// addresses bit q of the array index (little-endian).

void apply_1q(std::span<Complex> amps, std::size_t q, const Mat2& m);

void apply_2q(std::span<Complex> amps, std::size_t q0, std::size_t q1,
              const Mat4& m);

/// Diagonal two-qubit operator; `diag` indexed by bit(q0) + 2 * bit(q1).
void apply_diag_2q(std::span<Complex> amps, std::size_t q0, std::size_t q1,
                   const std::array<Complex, 4>& diag);

}  // namespace kernels

}  // namespace nqaoa
