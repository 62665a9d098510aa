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

#include <gtest/gtest.h>

#include "nqaoa/error.hpp"
#include "nqaoa/linalg.hpp"
#include "nqaoa/noise.hpp"
#include "nqaoa/rng.hpp"
#include "nqaoa/statevector.hpp"

namespace nqaoa {
namespace {

constexpr double kTol = 1e-12;

double max_entry_diff(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(MakeChannel, DephasingAtZeroKeepsZeroOperator) {
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Dephasing, 0.0);
  ASSERT_EQ(ch.branch_count(), 2U);
  EXPECT_LT(max_entry_diff(ch.kraus()[0], identity2()), kTol);
  EXPECT_LT(max_entry_diff(ch.kraus()[1], Mat2{}), kTol);
  EXPECT_TRUE(ch.is_noiseless());
}

TEST(MakeChannel, BitFlipAtTwoPercent) {
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::BitFlip, 0.02);
  EXPECT_LT(max_entry_diff(ch.kraus()[0], scaled(identity2(), std::sqrt(0.98))), kTol);
  EXPECT_LT(max_entry_diff(ch.kraus()[1], scaled(pauli_x(), std::sqrt(0.02))), kTol);
}

TEST(MakeChannel, DepolarizingLeadingCoefficient) {
  const NoiseChannel ch = NoiseChannel::make(ChannelKind::Depolarizing, 0.02);
  ASSERT_EQ(ch.branch_count(), 4U);
  EXPECT_NEAR(ch.kraus()[0][0].real(), std::sqrt(0.985), kTol);
  EXPECT_LT(max_entry_diff(ch.kraus()[1], scaled(pauli_x(), std::sqrt(0.02) / 2)), kTol);
  EXPECT_LT(max_entry_diff(ch.kraus()[2], scaled(pauli_y(), std::sqrt(0.02) / 2)), kTol);
  EXPECT_LT(max_entry_diff(ch.kraus()[3], scaled(pauli_z(), std::sqrt(0.02) / 2)), kTol);
}

TEST(MakeChannel, RejectsStrengthOutsideUnitInterval) {
  EXPECT_THROW(NoiseChannel::make(ChannelKind::BitFlip, -0.01), ValidationError);
  EXPECT_THROW(NoiseChannel::make(ChannelKind::BitFlip, 1.01), ValidationError);
  EXPECT_THROW(NoiseChannel::make(ChannelKind::BitFlip, std::nan("")), ValidationError);
  EXPECT_NO_THROW(NoiseChannel::make(ChannelKind::Depolarizing, 1.0));
}

TEST(MakeChannel, ParsesKindNames) {
  EXPECT_EQ(parse_channel_kind("dephasing"), ChannelKind::Dephasing);
  EXPECT_EQ(parse_channel_kind("bitflip"), ChannelKind::BitFlip);
  EXPECT_EQ(parse_channel_kind("Depolarizing"), ChannelKind::Depolarizing);
  EXPECT_FALSE(parse_channel_kind("amplitude-damping").has_value());
  for (auto k : {ChannelKind::Dephasing, ChannelKind::BitFlip, ChannelKind::Depolarizing})
    EXPECT_EQ(parse_channel_kind(to_string(k)), k);
}

TEST(ValidateCptp, NamedChannelsAtOnePercent) {
  for (auto kind : {ChannelKind::Dephasing, ChannelKind::BitFlip, ChannelKind::Depolarizing})
    EXPECT_TRUE(validate_cptp(NoiseChannel::make(kind, 0.01)).pass);
}

TEST(ValidateCptp, DephasingWithoutSecondOperatorFails) {
  const double p = 0.5;
  const Mat2 k0 = scaled(identity2(), std::sqrt(1 - p));
  const CptpCheck check = validate_cptp(std::vector<Mat2>{k0});
  EXPECT_FALSE(check.pass);
  EXPECT_NEAR(check.residual, 0.5, kTol);
  EXPECT_THROW(NoiseChannel::custom({k0}), ValidationError);
}

TEST(ValidateCptp, IdentityCustomChannelPasses) {
  const NoiseChannel ch = NoiseChannel::custom({identity2()});
  EXPECT_TRUE(validate_cptp(ch).pass);
  EXPECT_TRUE(ch.is_noiseless());
  EXPECT_EQ(ch.kind(), ChannelKind::Custom);
}

TEST(ValidateCptp, EveryGridPointForEveryKind) {
  int checks = 0;
  for (auto kind : {ChannelKind::Dephasing, ChannelKind::BitFlip, ChannelKind::Depolarizing}) {
    for (double p : noise_grid()) {
      const CptpCheck c = validate_cptp(NoiseChannel::make(kind, p));
      EXPECT_TRUE(c.pass) << to_string(kind) << " p=" << p;
      EXPECT_LT(c.residual, 1e-12);
      checks += 2;
    }
  }
  EXPECT_EQ(checks, 66);
}

TEST(Depolarizing, MatchesClosedForm) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = rng.uniform();
    // Random single-qubit density matrix from a Bloch vector inside the ball.
    double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1), z = rng.uniform(-1, 1);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1) x /= r, y /= r, z /= r;
    const std::vector<Complex> e = {(1 + z) / 2, Complex{x, -y} / 2.0, Complex{x, y} / 2.0,
                                    (1 - z) / 2};
    const DensityMatrix rho = DensityMatrix::from_entries(1, e);
    const DensityMatrix out =
        apply_kraus_exact(rho, NoiseChannel::make(ChannelKind::Depolarizing, p), 0);
    const Mat2 m = {e[0], e[1], e[2], e[3]};
    auto sandwich = [&](const Mat2& a) { return multiply(multiply(a, m), adjoint(a)); };
    const Mat2 sx = sandwich(pauli_x()), sy = sandwich(pauli_y()), sz = sandwich(pauli_z());
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex want = (1 - 0.75 * p) * m[i] + (p / 4) * (sx[i] + sy[i] + sz[i]);
      EXPECT_LT(std::abs(out.entries()[i] - want), 1e-12);
    }
  }
}

TEST(NoiseGrid, Endpoints) {
  const auto g = noise_grid();
  ASSERT_EQ(g.size(), 11U);
  EXPECT_NEAR(g.front(), 0.0001, 0.0001 * 1e-15);
  EXPECT_NEAR(g.back(), 0.02, 0.02 * 1e-15);
  EXPECT_NEAR(g[5], 0.0001 * std::sqrt(200.0), 1e-15);
}

TEST(NoiseGrid, StrictlyIncreasing) {
  const auto g = noise_grid();
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
}

TEST(Superoperator, ForwardAndAdjointAreDual) {
  // Tr(A E(rho)) == Tr(E*(A) rho) for random rho and observable A.
  Rng rng(5);
  for (auto kind : {ChannelKind::Dephasing, ChannelKind::BitFlip, ChannelKind::Depolarizing}) {
    const NoiseChannel ch = NoiseChannel::make(kind, 0.3);
    DensityMatrix rho = DensityMatrix::from_entries(1, {0.7, Complex{0.1, 0.2}, Complex{0.1, -0.2}, 0.3});
    DensityMatrix obs = DensityMatrix::from_entries(1, {0.2, Complex{0.3, 0.1}, Complex{0.3, -0.1}, 0.8});
    DensityMatrix forward = rho;
    forward.apply_superoperator(ch.superoperator(), 0);
    DensityMatrix backward = obs;
    backward.apply_superoperator(ch.adjoint_superoperator(), 0);
    EXPECT_NEAR(obs.trace_with(forward).real(), backward.trace_with(rho).real(), 1e-14);
  }
}

}  // namespace
}  // namespace nqaoa
