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

#include "nqaoa/noise.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "nqaoa/error.hpp"

namespace nqaoa {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Dephasing:
      return "dephasing";
    case ChannelKind::BitFlip:
      return "bitflip";
    case ChannelKind::Depolarizing:
      return "depolarizing";
    case ChannelKind::Custom:
      return "custom";
  }
  return "unknown";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dephasing") return ChannelKind::Dephasing;
  if (lower == "bitflip" || lower == "bit-flip" || lower == "bit_flip") return ChannelKind::BitFlip;
  if (lower == "depolarizing") return ChannelKind::Depolarizing;
  return std::nullopt;
}

namespace {

Mat4 forward_superop(std::span<const Mat2> kraus) {
  Mat4 s{};
  for (const Mat2& k : kraus) {
    Mat2 kc;
    for (std::size_t i = 0; i < 4; ++i) kc[i] = std::conj(k[i]);
    const Mat4 term = kron(k, kc);
    for (std::size_t i = 0; i < 16; ++i) s[i] += term[i];
  }
  return s;
}

// O -> K^dagger O K: rows see K^dagger, columns see (K)^T.
Mat4 adjoint_superop(std::span<const Mat2> kraus) {
  Mat4 s{};
  for (const Mat2& k : kraus) {
    const Mat2 kd = adjoint(k);
    const Mat2 kt = {k[0], k[2], k[1], k[3]};
    const Mat4 term = kron(kd, kt);
    for (std::size_t i = 0; i < 16; ++i) s[i] += term[i];
  }
  return s;
}

}  // namespace

NoiseChannel::NoiseChannel(ChannelKind kind, double p, std::vector<Mat2> kraus)
    : kind_(kind),
      p_(p),
      kraus_(std::move(kraus)),
      super_(forward_superop(kraus_)),
      adjoint_super_(adjoint_superop(kraus_)) {}

NoiseChannel NoiseChannel::make(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "noise strength must lie in [0, 1], got " << p;
    throw ValidationError(msg.str());
  }
  std::vector<Mat2> ops;
  switch (kind) {
    case ChannelKind::Dephasing:
      ops = {scaled(identity2(), std::sqrt(1.0 - p)), scaled(pauli_z(), std::sqrt(p))};
      break;
    case ChannelKind::BitFlip:
      ops = {scaled(identity2(), std::sqrt(1.0 - p)), scaled(pauli_x(), std::sqrt(p))};
      break;
    case ChannelKind::Depolarizing: {
      const double a = std::sqrt(p) / 2.0;
      ops = {scaled(identity2(), std::sqrt(1.0 - 0.75 * p)), scaled(pauli_x(), a),
             scaled(pauli_y(), a), scaled(pauli_z(), a)};
      break;
    }
    case ChannelKind::Custom:
      throw ValidationError("custom channels are built with NoiseChannel::custom");
  }
  return NoiseChannel(kind, p, std::move(ops));
}

NoiseChannel NoiseChannel::custom(std::vector<Mat2> kraus) {
  if (kraus.empty()) throw ValidationError("custom channel needs at least one Kraus operator");
  const CptpCheck check = validate_cptp(kraus);
  if (!check.pass) {
    std::ostringstream msg;
    msg << "Kraus operators are not trace preserving (residual " << check.residual << ")";
    throw ValidationError(msg.str());
  }
  const Mat2& k0 = kraus.front();
  const double weight = std::norm(k0[0]) + std::norm(k0[1]) + std::norm(k0[2]) + std::norm(k0[3]);
  const double p = std::clamp(1.0 - weight / 2.0, 0.0, 1.0);
  return NoiseChannel(ChannelKind::Custom, p, std::move(kraus));
}

bool NoiseChannel::is_noiseless() const {
  if (kraus_.front() != identity2()) return false;
  return std::all_of(kraus_.begin() + 1, kraus_.end(),
                     [](const Mat2& k) { return k == Mat2{}; });
}

std::string NoiseChannel::describe() const {
  std::ostringstream out;
  out << to_string(kind_) << "(p=" << p_ << ", " << kraus_.size() << " Kraus operators)";
  return out.str();
}

CptpCheck validate_cptp(std::span<const Mat2> kraus) {
  Mat2 sum{};
  for (const Mat2& k : kraus) {
    const Mat2 kk = multiply(adjoint(k), k);
    for (std::size_t i = 0; i < 4; ++i) sum[i] += kk[i];
  }
  const Mat2 id = identity2();
  double residual = 0.0;
  for (std::size_t i = 0; i < 4; ++i) residual = std::max(residual, std::abs(sum[i] - id[i]));
  return {residual < kCptpTolerance, residual};
}

CptpCheck validate_cptp(const NoiseChannel& channel) { return validate_cptp(channel.kraus()); }

std::vector<double> noise_grid() {
  std::vector<double> grid;
  grid.reserve(11);
  for (int i = 0; i <= 10; ++i) grid.push_back(1e-4 * std::pow(200.0, 0.1 * i));
  return grid;
}

}  // namespace nqaoa
