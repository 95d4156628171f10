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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtele/circuit.hpp"

namespace qtele {

inline constexpr int kPayloadVersion = 1;

/// Tolerance for deciding that measured statistics fit a candidate solution.
inline constexpr double kRecoveryTol = 1e-9;

/// Key material Alice sends Bob over the classical channel.
///
/// profile_kappas carries each bound profile as a pure-power exponent e with
/// f(q) = q^e (see exponent_descriptor): empty for plain, [omega, delta] for
/// case1, [omega, delta, gamma] for case2.
struct ClassicalPayload {
  int version = kPayloadVersion;
  Protocol protocol = Protocol::kPlain;
  AliceOutcome alice_basis{0};
  double det_abs = 0.0;
  double s = 0.0;
  ChannelShape channel_shape = ChannelShape::kNu;
  std::vector<double> profile_kappas;
  std::optional<std::pair<double, double>> measured;

  /// Throws ValidationError on any invariant violation.
  void validate() const;

  friend bool operator==(const ClassicalPayload&, const ClassicalPayload&) = default;
};

/// Number of profile exponents each protocol carries.
std::size_t expected_kappa_count(Protocol protocol);

/// Alice's side: the payload for one run. det_abs is |det A| for plain and
/// |det A_q| = omega delta |[a][b]| for the deformed protocols.
ClassicalPayload make_payload(const InfoQubit& info, const ChannelSpec& channel,
                              const ProfileSet& profiles, Protocol protocol,
                              AliceOutcome alice_basis,
                              std::optional<std::pair<double, double>> measured = std::nullopt);

/// Canonical text form: one key=value record per line, keys in byte order,
/// reals in shortest round-trip decimal, lists comma-separated, every record
/// newline-terminated. Throws ValidationError for an invalid payload.
std::string encode(const ClassicalPayload& payload);

/// Inverse of encode. Throws ParseError (with byte offset) for malformed or
/// non-canonical bytes and ValidationError for well-formed but out-of-range
/// values.
ClassicalPayload decode(std::string_view bytes);

struct RecoveryResult {
  double abs_alpha0 = 0.0;
  double abs_alpha1 = 0.0;
  /// Recovered undeformed channel magnitudes (first slot, second slot).
  double abs_a = 0.0;
  double abs_b = 0.0;
  bool ambiguous = false;
  /// |alpha0^2 + alpha1^2 - 1| of the selected root.
  double residual = 0.0;
  /// |a^2 + b^2 - 1| after undoing the channel deformation.
  double channel_residual = 0.0;
  /// The other consistent root when ambiguous.
  std::optional<std::pair<double, double>> alternate;
};

/// Bob's side: invert (M0, M1) to |alpha0|, |alpha1| with the payload.
/// Throws ValidationError for impossible inputs (det_abs > 1/2, negative
/// counts) and InconsistentStatistics when no root reproduces the counts.
RecoveryResult recover_amplitudes(double m0, double m1, const ClassicalPayload& payload);

/// True iff recovery succeeds with both residuals within 1e-9.
bool validate_key(double m0, double m1, const ClassicalPayload& payload) noexcept;

}  // namespace qtele
