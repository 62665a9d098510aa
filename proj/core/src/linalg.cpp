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

#include "nqaoa/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace nqaoa {

Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 scaled(const Mat2& m, Complex s) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = s * m[i];
  return out;
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat2 conjugate(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])};
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] += a[r * 4 + k] * b[k * 4 + c];
  return out;
}

Mat4 adjoint(const Mat4& m) {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = std::conj(m[c * 4 + r]);
  return out;
}

Mat4 conjugate(const Mat4& m) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out[i] = std::conj(m[i]);
  return out;
}

Mat4 kron(const Mat2& hi, const Mat2& lo) {
  Mat4 out;
  for (std::size_t hr = 0; hr < 2; ++hr)
    for (std::size_t lr = 0; lr < 2; ++lr)
      for (std::size_t hc = 0; hc < 2; ++hc)
        for (std::size_t lc = 0; lc < 2; ++lc)
          out[(hr * 2 + lr) * 4 + (hc * 2 + lc)] = hi[hr * 2 + hc] * lo[lr * 2 + lc];
  return out;
}

double unitarity_residual(const Mat2& m) {
  const Mat2 p = multiply(adjoint(m), m);
  const Mat2 id = identity2();
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(p[i] - id[i]));
  return worst;
}

double unitarity_residual(const Mat4& m) {
  const Mat4 p = multiply(adjoint(m), m);
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      worst = std::max(worst, std::abs(p[r * 4 + c] - (r == c ? 1.0 : 0.0)));
  return worst;
}

bool is_diagonal(const Mat4& m) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && m[r * 4 + c] != Complex{}) return false;
  return true;
}

namespace kernels {

void apply_1q(std::span<Complex> amps, std::size_t q, const Mat2& m) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  const std::uint64_t lo = mask - 1;
  const std::uint64_t half = amps.size() / 2;
  assert(mask < amps.size());
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k & ~lo) << 1) | (k & lo);
    const std::uint64_t i1 = i0 | mask;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_2q(std::span<Complex> amps, std::size_t q0, std::size_t q1, const Mat4& m) {
  assert(q0 != q1);
  const std::uint64_t m0 = std::uint64_t{1} << q0;
  const std::uint64_t m1 = std::uint64_t{1} << q1;
  const std::size_t lo_bit = std::min(q0, q1);
  const std::size_t hi_bit = std::max(q0, q1);
  const std::uint64_t lo_mask = (std::uint64_t{1} << lo_bit) - 1;
  const std::uint64_t hi_mask = (std::uint64_t{1} << hi_bit) - 1;
  const std::uint64_t quarter = amps.size() / 4;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    // insert zero bits at lo_bit, then at hi_bit
    std::uint64_t base = ((k & ~lo_mask) << 1) | (k & lo_mask);
    base = ((base & ~hi_mask) << 1) | (base & hi_mask);
    const std::uint64_t idx[4] = {base, base | m0, base | m1, base | m0 | m1};
    const Complex v[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
    for (std::size_t r = 0; r < 4; ++r) {
      amps[idx[r]] = m[r * 4] * v[0] + m[r * 4 + 1] * v[1] + m[r * 4 + 2] * v[2] +
                     m[r * 4 + 3] * v[3];
    }
  }
}

void apply_diag_2q(std::span<Complex> amps, std::size_t q0, std::size_t q1,
                   const std::array<Complex, 4>& diag) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const std::size_t local = ((i >> q0) & 1U) | (((i >> q1) & 1U) << 1);
    amps[i] *= diag[local];
  }
}

}  // namespace kernels

}  // namespace nqaoa
