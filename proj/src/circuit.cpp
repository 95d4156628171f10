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

#include "qtele/circuit.hpp"

#include <cmath>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

constexpr double kFdStep = 1e-5;

std::size_t bit_of(std::size_t num_qubits, std::size_t wire) { return num_qubits - 1 - wire; }

void require_wire(const PureState& state, std::size_t wire) {
  if (wire >= state.num_qubits()) {
    throw RangeError("wire " + std::to_string(wire) + " outside a " +
                     std::to_string(state.num_qubits()) + "-qubit register");
  }
}

double bound_channel_product(const ProfileSet& profiles, DeformationParam p) {
  return eval(profiles.omega, p) * eval(profiles.delta, p);
}

// Overall product F in front of the final state, and the amplitudes it
// multiplies (info X_i, channel c_jk before scaling).
struct Expansion {
  double factor;
  std::array<double, 2> info;
  std::array<double, 4> channel;
};

Expansion expand(const InfoQubit& info, const ChannelSpec& channel, const ProfileSet& profiles,
                 Protocol protocol) {
  Expansion e{1.0, {info.alpha0(), info.alpha1()}, channel.amplitudes()};
  if (protocol == Protocol::kPlain) return e;
  const DeformationParam p = channel.p;
  e.factor = bound_channel_product(profiles, p);
  for (double& c : e.channel) c = qnumber(c, p);
  if (protocol == Protocol::kCase2) {
    e.factor *= eval(profiles.gamma, p);
    for (double& x : e.info) x = qnumber(x, p);
  }
  return e;
}

void check_configuration(const InfoQubit& info, const ChannelSpec& channel,
                         const ProfileSet& profiles, Protocol protocol) {
  channel.validate();
  const bool wants_deformed = protocol != Protocol::kPlain;
  if (channel.deformed != wants_deformed) {
    throw ConfigError(std::string("protocol ") + std::string(to_string(protocol)) +
                      (wants_deformed ? " needs a deformed channel" : " needs an undeformed channel"));
  }
  if (!wants_deformed) return;

  const DeformationParam p = channel.p;
  double channel_sum = 0.0;
  for (double c : channel.amplitudes()) channel_sum += qnumber(c, p) * qnumber(c, p);
  const double channel_norm = bound_channel_product(profiles, p) * channel_sum;
  if (std::fabs(channel_norm - 1.0) > kExactTol) {
    throw ConfigError("omega*delta does not normalize the deformed channel (norm " +
                      std::to_string(channel_norm) + ")");
  }
  if (protocol == Protocol::kCase2) {
    const double q0 = qnumber(info.alpha0(), p);
    const double q1 = qnumber(info.alpha1(), p);
    const double info_norm = eval(profiles.gamma, p) * (q0 * q0 + q1 * q1);
    if (std::fabs(info_norm - 1.0) > kExactTol) {
      throw ConfigError("gamma does not normalize the deformed information qubit (norm " +
                        std::to_string(info_norm) + ")");
    }
  }
}

}  // namespace

InfoQubit::InfoQubit(double alpha0, double alpha1) : alpha0_(alpha0), alpha1_(alpha1) {
  if (!std::isfinite(alpha0) || !std::isfinite(alpha1) ||
      std::fabs(alpha0 * alpha0 + alpha1 * alpha1 - 1.0) > kExactTol) {
    throw DomainError("information qubit is not normalized");
  }
}

InfoQubit InfoQubit::from_alpha0(double alpha0) {
  if (!(std::fabs(alpha0) <= 1.0)) throw DomainError("|alpha0| must not exceed 1");
  return InfoQubit(alpha0, std::sqrt(1.0 - alpha0 * alpha0));
}

std::string_view to_string(ChannelShape shape) {
  switch (shape) {
    case ChannelShape::kNu: return "nu";
    case ChannelShape::kNuPrime: return "nu_prime";
    case ChannelShape::kNuDPrime: return "nu_dprime";
    case ChannelShape::kNuTPrime: return "nu_tprime";
  }
  return "nu";
}

ChannelShape parse_channel_shape(std::string_view text) {
  for (auto shape : {ChannelShape::kNu, ChannelShape::kNuPrime, ChannelShape::kNuDPrime,
                     ChannelShape::kNuTPrime}) {
    if (to_string(shape) == text) return shape;
  }
  throw RangeError("unknown channel shape '" + std::string(text) + "'");
}

ShapeLayout layout(ChannelShape shape) {
  switch (shape) {
    case ChannelShape::kNu: return {{0, 3}, 1.0};
    case ChannelShape::kNuPrime: return {{1, 2}, 1.0};
    case ChannelShape::kNuDPrime: return {{1, 2}, -1.0};
    case ChannelShape::kNuTPrime: return {{0, 3}, -1.0};
  }
  return {{0, 3}, 1.0};
}

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::kPlain: return "plain";
    case Protocol::kCase1: return "case1";
    case Protocol::kCase2: return "case2";
  }
  return "plain";
}

Protocol parse_protocol(std::string_view text) {
  for (auto p : {Protocol::kPlain, Protocol::kCase1, Protocol::kCase2}) {
    if (to_string(p) == text) return p;
  }
  throw RangeError("unknown protocol '" + std::string(text) + "'");
}

AliceOutcome AliceOutcome::parse(std::string_view text) {
  if (text.size() == 2 && (text[0] == '0' || text[0] == '1') && (text[1] == '0' || text[1] == '1')) {
    return AliceOutcome(2 * (text[0] - '0') + (text[1] - '0'));
  }
  throw RangeError("Alice basis must be one of 00, 01, 10, 11 (got '" + std::string(text) + "')");
}

std::string AliceOutcome::str() const {
  return {static_cast<char>('0' + wire0()), static_cast<char>('0' + wire1())};
}

void ChannelSpec::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || std::fabs(a * a + b * b - 1.0) > kExactTol) {
    throw DomainError("channel amplitudes are not normalized");
  }
}

bool ChannelSpec::maximal() const { return std::fabs(std::fabs(a) - kInvSqrt2) <= kExactTol; }

std::array<double, 4> ChannelSpec::amplitudes() const {
  const ShapeLayout l = layout(shape);
  std::array<double, 4> out{};
  out[static_cast<std::size_t>(l.slots[0])] = a;
  out[static_cast<std::size_t>(l.slots[1])] = l.sign * b;
  return out;
}

AmplitudeMatrix ChannelSpec::amplitude_matrix() const {
  const auto c = amplitudes();
  return {c[0], c[1], c[2], c[3]};
}

ChannelSpec make_channel(ChannelShape shape, double a, bool deformed, DeformationParam p) {
  if (!(std::fabs(a) <= 1.0)) throw DomainError("|a| must not exceed 1");
  return ChannelSpec{shape, a, std::sqrt(1.0 - a * a), deformed, p};
}

ProfileSet bind_profiles(const InfoQubit& info, const ChannelSpec& channel, Protocol protocol,
                         double kappa) {
  ProfileSet set;
  if (protocol == Protocol::kPlain) return set;
  const auto [omega, delta] = split_product(product_for_state(channel.amplitude_matrix(), channel.p), kappa);
  set.omega = omega;
  set.delta = delta;
  if (protocol == Protocol::kCase2) {
    set.gamma = DeformationProfile{ProfileKind::kPower, 0.0,
                                   gamma_for_info(info.alpha0(), info.alpha1(), channel.p)};
  }
  return set;
}

PureState apply_hadamard(const PureState& state, std::size_t target) {
  require_wire(state, target);
  const std::size_t mask = std::size_t{1} << bit_of(state.num_qubits(), target);
  const auto in = state.amplitudes();
  std::vector<double> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i & mask) continue;
    const double lo = in[i];
    const double hi = in[i | mask];
    out[i] = kInvSqrt2 * (lo + hi);
    out[i | mask] = kInvSqrt2 * (lo - hi);
  }
  return PureState(std::move(out));
}

PureState apply_cnot(const PureState& state, std::size_t control, std::size_t target) {
  require_wire(state, control);
  require_wire(state, target);
  if (control == target) throw RangeError("CNOT control and target coincide");
  const std::size_t cmask = std::size_t{1} << bit_of(state.num_qubits(), control);
  const std::size_t tmask = std::size_t{1} << bit_of(state.num_qubits(), target);
  const auto in = state.amplitudes();
  std::vector<double> out(in.begin(), in.end());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i & cmask) out[i ^ tmask] = in[i];
  }
  return PureState(std::move(out));
}

PureState input_info_state(const InfoQubit& info, const ChannelSpec& channel,
                           const ProfileSet& profiles, Protocol protocol) {
  if (protocol != Protocol::kCase2) return PureState({info.alpha0(), info.alpha1()});
  const DeformationParam p = channel.p;
  const double root = std::sqrt(eval(profiles.gamma, p));
  return PureState({root * qnumber(info.alpha0(), p), root * qnumber(info.alpha1(), p)});
}

PureState input_channel_state(const ChannelSpec& channel, const ProfileSet& profiles,
                              Protocol protocol) {
  auto amps = channel.amplitudes();
  if (protocol == Protocol::kPlain) return PureState({amps.begin(), amps.end()});
  const double root = std::sqrt(bound_channel_product(profiles, channel.p));
  std::vector<double> v;
  v.reserve(4);
  for (double c : amps) v.push_back(root * qnumber(c, channel.p));
  return PureState(std::move(v));
}

TeleportRecord teleport(const InfoQubit& info, const ChannelSpec& channel,
                        const ProfileSet& profiles, Protocol protocol) {
  check_configuration(info, channel, profiles, protocol);

  TeleportRecord record;
  record.protocol = protocol;
  record.initial_state = input_info_state(info, channel, profiles, protocol)
                             .tensor(input_channel_state(channel, profiles, protocol));
  record.final_state = apply_hadamard(apply_cnot(record.initial_state, 0, 1), 0);

  for (AliceOutcome o : AliceOutcome::all()) {
    Branch& br = record.branches[static_cast<std::size_t>(o.bits())];
    const auto base = static_cast<std::size_t>(2 * o.bits());
    br.outcome = o;
    br.bob = {record.final_state[base], record.final_state[base + 1]};
    br.m0 = br.bob[0] * br.bob[0];
    br.m1 = br.bob[1] * br.bob[1];
    br.probability = br.m0 + br.m1;
  }
  return record;
}

std::pair<double, double> bob_stats(const TeleportRecord& record, AliceOutcome alice_basis) {
  const Branch& br = record.branch(alice_basis);
  return {br.m0, br.m1};
}

std::pair<double, double> bob_stats_closed(const InfoQubit& info, const ChannelSpec& channel,
                                           const ProfileSet& profiles, Protocol protocol,
                                           AliceOutcome alice_basis) {
  const Expansion e = expand(info, channel, profiles, protocol);
  const int m = alice_basis.wire0();
  const int n = alice_basis.wire1();
  std::array<double, 2> stats{};
  for (int k = 0; k < 2; ++k) {
    double amp = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double sign = (i * m) % 2 == 0 ? 1.0 : -1.0;
      amp += sign * e.info[static_cast<std::size_t>(i)] *
             e.channel[static_cast<std::size_t>(2 * (n ^ i) + k)];
    }
    stats[static_cast<std::size_t>(k)] = 0.5 * e.factor * amp * amp;
  }
  return {stats[0], stats[1]};
}

double fidelity_closed(const InfoQubit& info, const ChannelSpec& channel,
                       const ProfileSet& profiles, Protocol protocol) {
  const Expansion e = expand(info, channel, profiles, protocol);
  const ShapeLayout l = layout(channel.shape);
  const double overlap = e.channel[static_cast<std::size_t>(l.slots[0])] * e.info[0] +
                         e.channel[static_cast<std::size_t>(l.slots[1])] * e.info[1];
  return e.factor * overlap * overlap;
}

double fidelity_overlap(const TeleportRecord& record) {
  const double o = record.initial_state.inner(record.final_state);
  return o * o;
}

double plain_fidelity_curve(double a00, double alpha0, double alpha1, double sign) {
  const double g = a00 * alpha0 + sign * std::sqrt(1.0 - a00 * a00) * alpha1;
  return g * g;
}

FidelityExtrema fidelity_extrema(double alpha0) {
  if (!(alpha0 > 0.0 && alpha0 < 1.0)) {
    throw DomainError("fidelity extrema need 0 < alpha0 < 1");
  }
  const double alpha1 = std::sqrt(1.0 - alpha0 * alpha0);
  FidelityExtrema out{alpha0, alpha1, 4.0 * alpha0 * alpha0 * alpha1 * alpha1, 1.0, {}};

  const double curv_max = -2.0 / (alpha1 * alpha1);
  const double t = 2.0 * alpha0 * alpha0 - 1.0;
  const double curv_min = 2.0 * t * t / (alpha0 * alpha0);

  auto add = [&](double a00, double a11, double curvature, bool is_max) {
    const double sign = a11 < 0 ? -1.0 : 1.0;
    const double h = kFdStep;
    const double fp = plain_fidelity_curve(a00 + h, alpha0, alpha1, sign);
    const double f0 = plain_fidelity_curve(a00, alpha0, alpha1, sign);
    const double fm = plain_fidelity_curve(a00 - h, alpha0, alpha1, sign);
    const double f = (a00 * alpha0 + a11 * alpha1) * (a00 * alpha0 + a11 * alpha1);
    out.points.push_back(CriticalPoint{a00, a11, f, curvature, is_max, (fp - fm) / (2.0 * h),
                                       (fp - 2.0 * f0 + fm) / (h * h)});
  };
  add(alpha0, alpha1, curv_max, true);
  add(-alpha0, -alpha1, curv_max, true);
  add(alpha1, alpha0, curv_min, false);
  add(-alpha1, -alpha0, curv_min, false);
  return out;
}

}  // namespace qtele
