// Copyright 2026 The qtele Authors
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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "qtele/circuit.hpp"
#include "qtele/errors.hpp"
#include "qtele/random.hpp"

namespace qtele {
namespace {

const DeformationParam kUnit = DeformationParam::from_s(1.0);
constexpr std::array<Protocol, 3> kProtocols = {Protocol::kPlain, Protocol::kCase1, Protocol::kCase2};
constexpr std::array<ChannelShape, 4> kShapes = {ChannelShape::kNu, ChannelShape::kNuPrime,
                                                 ChannelShape::kNuDPrime, ChannelShape::kNuTPrime};

using Dense = std::array<std::array<double, 8>, 8>;

// Dense oracle: explicit 8x8 matrices for CNOT(0 -> 1) and H on wire 0.
std::array<double, 8> dense_circuit(const std::array<double, 8>& in) {
  Dense cnot{}, had{};
  for (int i = 0; i < 8; ++i) {
    const int w0 = (i >> 2) & 1, w1 = (i >> 1) & 1, w2 = i & 1;
    cnot[static_cast<std::size_t>((w0 << 2) | ((w1 ^ w0) << 1) | w2)][static_cast<std::size_t>(i)] = 1.0;
    for (int v0 = 0; v0 < 2; ++v0) {
      const int j = (v0 << 2) | (w1 << 1) | w2;
      had[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          ((w0 & v0) ? -1.0 : 1.0) / std::sqrt(2.0);
    }
  }
  auto apply = [](const Dense& m, const std::array<double, 8>& v) {
    std::array<double, 8> out{};
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) out[r] += m[r][c] * v[c];
    return out;
  };
  return apply(had, apply(cnot, in));
}

TEST(GateTest, Hadamard) {
  const PureState h0 = apply_hadamard(PureState({1.0, 0.0}), 0);
  EXPECT_NEAR(h0[0], kInvSqrt2, 1e-15);
  EXPECT_NEAR(h0[1], kInvSqrt2, 1e-15);
  const PureState h1 = apply_hadamard(PureState({0.0, 1.0}), 0);
  EXPECT_NEAR(h1[1], -kInvSqrt2, 1e-15);
  Rng rng(1);
  std::vector<double> v(8);
  for (double& x : v) x = rng.uniform(-1, 1);
  const PureState psi(v);
  for (std::size_t w = 0; w < 3; ++w) {
    EXPECT_LT(apply_hadamard(apply_hadamard(psi, w), w).max_abs_diff(psi), 1e-15);
  }
  EXPECT_THROW(apply_hadamard(psi, 3), RangeError);
}

TEST(GateTest, Cnot) {
  EXPECT_EQ(apply_cnot(PureState({0, 0, 1, 0}), 0, 1), PureState({0, 0, 0, 1}));
  EXPECT_EQ(apply_cnot(PureState({1, 0, 0, 0}), 0, 1), PureState({1, 0, 0, 0}));
  Rng rng(2);
  std::vector<double> v(8);
  for (double& x : v) x = rng.uniform(-1, 1);
  const PureState psi(v);
  EXPECT_EQ(apply_cnot(apply_cnot(psi, 2, 0), 2, 0), psi);
  EXPECT_THROW(apply_cnot(psi, 1, 1), RangeError);
}

TEST(ParseTest, EnumsAndOutcomes) {
  EXPECT_EQ(parse_protocol("case2"), Protocol::kCase2);
  EXPECT_THROW(parse_protocol("case3"), RangeError);
  for (ChannelShape s : kShapes) EXPECT_EQ(parse_channel_shape(to_string(s)), s);
  EXPECT_THROW(parse_channel_shape("mu"), RangeError);
  EXPECT_EQ(AliceOutcome::parse("10").wire0(), 1);
  EXPECT_EQ(AliceOutcome::parse("10").wire1(), 0);
  EXPECT_EQ(AliceOutcome::parse("01").str(), "01");
  EXPECT_THROW(AliceOutcome::parse("2"), RangeError);
  EXPECT_THROW(AliceOutcome::parse("012"), RangeError);
}

TEST(TeleportTest, PlainMaximal) {
  const auto info = InfoQubit::from_alpha0(kInvSqrt2);
  const auto channel = make_channel(ChannelShape::kNu, kInvSqrt2, false, {});
  const TeleportRecord rec = teleport(info, channel, {}, Protocol::kPlain);
  const auto [m0, m1] = bob_stats(rec, AliceOutcome(0));
  EXPECT_NEAR(m0, 0.125, 1e-15);
  EXPECT_NEAR(m1, 0.125, 1e-15);
  for (const Branch& b : rec.branches) EXPECT_NEAR(b.probability, 0.25, 1e-15);
}

TEST(TeleportTest, PlainBranchResiduals) {
  const double a0 = 0.6, a1 = 0.8, c0 = 0.28, c1 = std::sqrt(1 - 0.28 * 0.28);
  const TeleportRecord rec = teleport(InfoQubit(a0, a1), make_channel(ChannelShape::kNu, c0, false, {}),
                                      {}, Protocol::kPlain);
  const double r = kInvSqrt2;
  const std::array<std::array<double, 2>, 4> expect = {{{a0 * c0 * r, a1 * c1 * r},
                                                        {a1 * c0 * r, a0 * c1 * r},
                                                        {a0 * c0 * r, -a1 * c1 * r},
                                                        {-a1 * c0 * r, a0 * c1 * r}}};
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_NEAR(rec.branches[b].bob[0], expect[b][0], 1e-15) << b;
    EXPECT_NEAR(rec.branches[b].bob[1], expect[b][1], 1e-15) << b;
  }
  EXPECT_NEAR(bob_stats(rec, AliceOutcome(0)).first, 0.5 * a0 * a0 * c0 * c0, 1e-15);
}

TEST(TeleportTest, PlainWorkedExample) {
  const TeleportRecord rec = teleport(InfoQubit::from_alpha0(0.6),
                                      make_channel(ChannelShape::kNu, 0.6, false, {}), {},
                                      Protocol::kPlain);
  EXPECT_NEAR(bob_stats(rec, AliceOutcome(0)).first, 0.0648, 1e-15);
}

TEST(TeleportTest, Case1FrozenValues) {
  const auto info = InfoQubit::from_alpha0(0.6);
  const auto channel = make_channel(ChannelShape::kNu, 0.6, true, kUnit);
  const auto profiles = bind_profiles(info, channel, Protocol::kCase1, 0.25);
  const auto [m0, m1] = bob_stats(teleport(info, channel, profiles, Protocol::kCase1), AliceOutcome(0));
  EXPECT_NEAR(m0, 0.061101619585614726, 1e-12);
  EXPECT_NEAR(m1, 0.21137489851446273, 1e-12);
}

TEST(TeleportTest, MatchesDenseOracleAndClosedForm) {
  Rng rng(77);
  for (Protocol protocol : kProtocols) {
    for (int d = 0; d < 100; ++d) {
      const auto info = InfoQubit::from_alpha0(rng.uniform(-0.95, 0.95));
      const bool deformed = protocol != Protocol::kPlain;
      const auto p = deformed ? DeformationParam::from_s(rng.unit()) : DeformationParam();
      const auto channel = make_channel(kShapes[static_cast<std::size_t>(d % 4)], rng.uniform(0.05, 0.95),
                                        deformed, p);
      const auto profiles = bind_profiles(info, channel, protocol, rng.uniform(-1, 1));
      const TeleportRecord rec = teleport(info, channel, profiles, protocol);
      std::array<double, 8> in{};
      for (std::size_t i = 0; i < 8; ++i) in[i] = rec.initial_state[i];
      const auto out = dense_circuit(in);
      double total = 0.0;
      for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(rec.final_state[i], out[i], 1e-12);
      for (AliceOutcome o : AliceOutcome::all()) {
        const auto [m0, m1] = bob_stats(rec, o);
        const auto [c0, c1] = bob_stats_closed(info, channel, profiles, protocol, o);
        EXPECT_NEAR(m0, c0, 1e-12);
        EXPECT_NEAR(m1, c1, 1e-12);
        EXPECT_NEAR(m0 * m1, rec.branches[0].m0 * rec.branches[0].m1, 1e-12);
        total += m0 + m1;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(TeleportTest, ProductOfStatistics) {
  const double a0 = 0.6, a1 = 0.8, c0 = 0.3;
  const auto channel = make_channel(ChannelShape::kNu, c0, false, {});
  const TeleportRecord rec = teleport(InfoQubit(a0, a1), channel, {}, Protocol::kPlain);
  const double det = channel.amplitude_matrix().det();
  for (AliceOutcome o : AliceOutcome::all()) {
    const auto [m0, m1] = bob_stats(rec, o);
    EXPECT_NEAR(m0 * m1, a0 * a0 * a1 * a1 * det * det / 4, 1e-15);
  }
}

TEST(TeleportTest, ConfigurationErrors) {
  const auto info = InfoQubit::from_alpha0(0.6);
  const auto plain = make_channel(ChannelShape::kNu, 0.6, false, {});
  const auto deformed = make_channel(ChannelShape::kNu, 0.6, true, kUnit);
  EXPECT_THROW(teleport(info, deformed, {}, Protocol::kPlain), ConfigError);
  EXPECT_THROW(teleport(info, plain, {}, Protocol::kCase1), ConfigError);
  // Unbound profiles leave the deformed channel unnormalized.
  EXPECT_THROW(teleport(info, deformed, {}, Protocol::kCase1), ConfigError);
  auto profiles = bind_profiles(info, deformed, Protocol::kCase2, 0.1);
  profiles.gamma.scale *= 1.01;
  EXPECT_THROW(teleport(info, deformed, profiles, Protocol::kCase2), ConfigError);
  EXPECT_THROW(InfoQubit(0.6, 0.6), DomainError);
  EXPECT_THROW(InfoQubit::from_alpha0(1.2), DomainError);
}

TEST(TeleportTest, DeformedReducesToPlainAtSmallS) {
  const auto info = InfoQubit::from_alpha0(0.35);
  const auto tiny = DeformationParam::from_s(1e-8);
  for (ChannelShape shape : kShapes) {
    const auto plain = teleport(info, make_channel(shape, 0.45, false, {}), {}, Protocol::kPlain);
    const auto channel = make_channel(shape, 0.45, true, tiny);
    for (Protocol protocol : {Protocol::kCase1, Protocol::kCase2}) {
      const auto rec = teleport(info, channel, bind_profiles(info, channel, protocol, 0.7), protocol);
      EXPECT_LT(rec.final_state.max_abs_diff(plain.final_state), 1e-6);
    }
  }
}

TEST(FidelityTest, ClosedFormValues) {
  const auto info = InfoQubit::from_alpha0(0.6);
  EXPECT_NEAR(fidelity_closed(info, make_channel(ChannelShape::kNu, 0.6, false, {}), {}, Protocol::kPlain),
              1.0, 1e-15);
  EXPECT_NEAR(fidelity_closed(info, make_channel(ChannelShape::kNu, 0.8, false, {}), {}, Protocol::kPlain),
              0.9216, 1e-15);
  const auto plain = make_channel(ChannelShape::kNu, 0.3, false, {});
  const auto zero = make_channel(ChannelShape::kNu, 0.3, true, {});
  const double f_plain = fidelity_closed(info, plain, {}, Protocol::kPlain);
  for (Protocol protocol : {Protocol::kCase1, Protocol::kCase2}) {
    EXPECT_NEAR(fidelity_closed(info, zero, bind_profiles(info, zero, protocol, 0.4), protocol),
                f_plain, 1e-15);
  }
}

TEST(FidelityTest, LiteralOverlapDiffers) {
  const auto info = InfoQubit::from_alpha0(0.6);
  const auto channel = make_channel(ChannelShape::kNu, 0.6, false, {});
  const double overlap = fidelity_overlap(teleport(info, channel, {}, Protocol::kPlain));
  EXPECT_NEAR(overlap, std::pow(0.36 + 0.48, 2) / 2, 1e-15);
}

TEST(FidelityExtremaTest, Values) {
  const FidelityExtrema ex = fidelity_extrema(0.6);
  EXPECT_NEAR(ex.f_min, 0.9216, 1e-15);
  EXPECT_EQ(ex.f_max, 1.0);
  ASSERT_EQ(ex.points.size(), 4u);
  EXPECT_NEAR(ex.points[0].fidelity, 1.0, 1e-15);
  EXPECT_NEAR(ex.points[0].fd_gradient, 0.0, 1e-6);
  EXPECT_NEAR(ex.points[0].fd_curvature, -2.0 / 0.64, 1e-4);
  EXPECT_NEAR(ex.points[2].a00, 0.8, 1e-15);
  EXPECT_NEAR(ex.points[2].fidelity, 0.9216, 1e-15);
  // The closed form is not stationary at a00 = alpha1.
  EXPECT_NEAR(ex.points[2].fd_gradient, 4 * 0.8 * (0.36 - 0.64), 1e-6);

  const FidelityExtrema maximal = fidelity_extrema(kInvSqrt2);
  EXPECT_NEAR(maximal.f_min, 1.0, 1e-15);
  for (const auto& cp : maximal.points) EXPECT_NEAR(cp.fidelity, 1.0, 1e-15);

  EXPECT_THROW(fidelity_extrema(0.0), DomainError);
  EXPECT_THROW(fidelity_extrema(1.0), DomainError);
}

}  // namespace
}  // namespace qtele
