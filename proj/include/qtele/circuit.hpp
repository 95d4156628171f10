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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtele/algebra.hpp"
#include "qtele/deformation.hpp"
#include "qtele/qnum.hpp"
#include "qtele/state.hpp"

namespace qtele {

/// Information qubit alpha0|0> + alpha1|1>, real amplitudes.
class InfoQubit {
 public:
  /// Throws DomainError unless alpha0^2 + alpha1^2 = 1 within 1e-12.
  InfoQubit(double alpha0, double alpha1);

  /// alpha1 = sqrt(1 - alpha0^2); throws DomainError unless |alpha0| <= 1.
  static InfoQubit from_alpha0(double alpha0);

  double alpha0() const noexcept { return alpha0_; }
  double alpha1() const noexcept { return alpha1_; }

 private:
  double alpha0_;
  double alpha1_;
};

/// Channel pair patterns: nu = a|00> + b|11>, nu_prime = a|01> + b|10>,
/// nu_dprime = a|01> - b|10>, nu_tprime = a|00> - b|11>.
enum class ChannelShape : std::uint8_t { kNu, kNuPrime, kNuDPrime, kNuTPrime };

std::string_view to_string(ChannelShape shape);
ChannelShape parse_channel_shape(std::string_view text);

/// Basis indices {first slot, second slot} of a shape and the sign of the
/// second slot.
struct ShapeLayout {
  std::array<int, 2> slots;
  double sign;
};
ShapeLayout layout(ChannelShape shape);

enum class Protocol : std::uint8_t { kPlain, kCase1, kCase2 };

std::string_view to_string(Protocol protocol);
Protocol parse_protocol(std::string_view text);

/// Alice's two-bit outcome on wires 0 and 1; the value is 2*w0 + w1.
class AliceOutcome {
 public:
  constexpr explicit AliceOutcome(int bits) : bits_(bits) {}
  /// Throws RangeError unless text is one of "00", "01", "10", "11".
  static AliceOutcome parse(std::string_view text);
  static constexpr std::array<AliceOutcome, 4> all() {
    return {AliceOutcome(0), AliceOutcome(1), AliceOutcome(2), AliceOutcome(3)};
  }

  constexpr int bits() const noexcept { return bits_; }
  constexpr int wire0() const noexcept { return bits_ >> 1; }
  constexpr int wire1() const noexcept { return bits_ & 1; }
  std::string str() const;

  friend constexpr bool operator==(AliceOutcome, AliceOutcome) = default;

 private:
  int bits_;
};

struct ChannelSpec {
  ChannelShape shape = ChannelShape::kNu;
  double a = kInvSqrt2;
  double b = kInvSqrt2;
  bool deformed = false;
  DeformationParam p;

  /// Throws DomainError unless a^2 + b^2 = 1 within 1e-12.
  void validate() const;
  bool maximal() const;
  /// Undeformed two-qubit amplitudes in basis order, sign of the shape applied.
  std::array<double, 4> amplitudes() const;
  AmplitudeMatrix amplitude_matrix() const;
};

/// ChannelSpec with b = sqrt(1 - a^2).
ChannelSpec make_channel(ChannelShape shape, double a, bool deformed, DeformationParam p);

/// Profiles that satisfy every product constraint the protocol imposes:
/// omega*delta from the channel (case1, case2), gamma from the information
/// qubit (case2). kappa is the free split exponent.
ProfileSet bind_profiles(const InfoQubit& info, const ChannelSpec& channel, Protocol protocol,
                         double kappa);

PureState apply_hadamard(const PureState& state, std::size_t target);
PureState apply_cnot(const PureState& state, std::size_t control, std::size_t target);

struct Branch {
  AliceOutcome outcome{0};
  double probability = 0.0;
  /// Bob's unnormalized components (<0|, <1|) in this branch.
  std::array<double, 2> bob{};
  double m0 = 0.0;
  double m1 = 0.0;
};

struct TeleportRecord {
  Protocol protocol = Protocol::kPlain;
  std::array<Branch, 4> branches;
  PureState initial_state{std::vector<double>(8, 0.0)};
  PureState final_state{std::vector<double>(8, 0.0)};

  const Branch& branch(AliceOutcome o) const { return branches[static_cast<std::size_t>(o.bits())]; }
};

/// Information qubit as it enters the circuit: plain and case1 use it as is,
/// case2 uses sqrt(gamma) ([alpha0], [alpha1]).
PureState input_info_state(const InfoQubit& info, const ChannelSpec& channel,
                           const ProfileSet& profiles, Protocol protocol);

/// Channel pair as it enters the circuit: the undeformed pattern, or
/// sqrt(omega delta) times the deformed pattern.
PureState input_channel_state(const ChannelSpec& channel, const ProfileSet& profiles,
                              Protocol protocol);

/// Runs CNOT(0 -> 1) then H(0) on info (x) channel and records every branch
/// of Alice's measurement on wires 0, 1. Throws ConfigError if the protocol
/// and channel disagree on deformation or the bound profiles violate a
/// normalization constraint.
TeleportRecord teleport(const InfoQubit& info, const ChannelSpec& channel,
                        const ProfileSet& profiles, Protocol protocol);

std::pair<double, double> bob_stats(const TeleportRecord& record, AliceOutcome alice_basis);

/// M0, M1 from the analytic expansion of the circuit:
/// M_k = F/2 (sum_i X_i (-1)^{i w0} c_{w1 xor i, k})^2, with F the bound
/// product (1, omega delta, or gamma omega delta) and X, c the (deformed)
/// amplitudes before scaling. For the nu channel this is, e.g. on outcome 00,
/// M0 = F X0^2 [a00]^2 / 2 and M1 = F X1^2 [a11]^2 / 2.
std::pair<double, double> bob_stats_closed(const InfoQubit& info, const ChannelSpec& channel,
                                           const ProfileSet& profiles, Protocol protocol,
                                           AliceOutcome alice_basis);

/// F = scale * (c_first X0 + sign c_second X1)^2: the plain form
/// (a00 alpha0 + a11 alpha1)^2 and its deformed versions.
double fidelity_closed(const InfoQubit& info, const ChannelSpec& channel,
                       const ProfileSet& profiles, Protocol protocol);

/// |<zeta_0|zeta_f>|^2 evaluated literally on the 3-qubit states.
double fidelity_overlap(const TeleportRecord& record);

struct CriticalPoint {
  double a00;
  double a11;
  double fidelity;
  /// Second derivative the closed-form analysis assigns to this point.
  double claimed_curvature;
  bool claimed_is_max;
  double fd_gradient;
  double fd_curvature;
};

struct FidelityExtrema {
  double alpha0;
  double alpha1;
  double f_min;
  double f_max;
  /// +alpha0, -alpha0 (maxima) then +alpha1, -alpha1 (minima), with the
  /// channel pair sign-flipped as a whole for the negative points.
  std::vector<CriticalPoint> points;
};

/// Fidelity of the plain protocol along the channel curve a11 = sign*sqrt(1 - a00^2).
double plain_fidelity_curve(double a00, double alpha0, double alpha1, double sign);

/// Extremal points of the plain closed-form fidelity, with central finite
/// differences (h = 1e-5) of the same closed form. Throws DomainError unless
/// 0 < alpha0 < 1.
FidelityExtrema fidelity_extrema(double alpha0);

}  // namespace qtele
