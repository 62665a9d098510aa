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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nqaoa/linalg.hpp"

namespace nqaoa {

enum class ChannelKind { Dephasing, BitFlip, Depolarizing, Custom };

std::string_view to_string(ChannelKind kind);

/// Accepts "dephasing", "bitflip" (or "bit-flip"), "depolarizing".
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Single-qubit channel in Kraus form {a0 I, a1 K1, ..., as Ks}.
///
/// Values are immutable once built. The named channels keep zero-weight
/// operators at p = 0 so every channel of a kind has the same branch count.
class NoiseChannel {
 public:
  /// Throws ValidationError unless 0 <= p <= 1 and kind is not Custom.
  static NoiseChannel make(ChannelKind kind, double p);

  /// Arbitrary Kraus set; rejected with ValidationError unless it passes
  /// validate_cptp. The reported strength is 1 - Tr(K0^dagger K0) / 2.
  static NoiseChannel custom(std::vector<Mat2> kraus);

  ChannelKind kind() const { return kind_; }
  double strength() const { return p_; }
  std::span<const Mat2> kraus() const { return kraus_; }
  std::size_t branch_count() const { return kraus_.size(); }

  /// True when every operator but the first is exactly zero and the first
  /// is exactly the identity.
  bool is_noiseless() const;

  /// Superoperator sum_i K_i (x) conj(K_i) acting on the vectorised density
  /// matrix. Local bit 1 is the row qubit, local bit 0 the column qubit.
  const Mat4& superoperator() const { return super_; }

  /// Heisenberg-picture map O -> sum_i K_i^dagger O K_i in the same layout.
  const Mat4& adjoint_superoperator() const { return adjoint_super_; }

  std::string describe() const;

 private:
  NoiseChannel(ChannelKind kind, double p, std::vector<Mat2> kraus);

  ChannelKind kind_;
  double p_;
  std::vector<Mat2> kraus_;
  Mat4 super_;
  Mat4 adjoint_super_;
};

struct CptpCheck {
  bool pass;
  double residual;  ///< max |(sum K^dagger K - I)_{rc}|
};

inline constexpr double kCptpTolerance = 1e-12;

CptpCheck validate_cptp(std::span<const Mat2> kraus);
CptpCheck validate_cptp(const NoiseChannel& channel);

/// Logarithmic strength grid p_i = 1e-4 * 200^(i/10), i = 0..10.
std::vector<double> noise_grid();

}  // namespace nqaoa
