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

#include "qtele/channel.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

constexpr std::array<std::string_view, 9> kKeys = {
    "alice_basis", "channel_shape", "det_abs", "m0", "m1",
    "profile_kappas", "protocol", "s", "version"};

std::string format_real(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

class Parser {
 public:
  explicit Parser(std::string_view bytes) : bytes_(bytes) {}

  ClassicalPayload parse() {
    if (bytes_.empty()) throw ParseError("empty payload", 0);
    if (bytes_.back() != '\n') throw ParseError("truncated payload (missing final newline)", bytes_.size());

    ClassicalPayload out;
    std::array<bool, kKeys.size()> seen{};
    int last_key = -1;
    std::size_t pos = 0;
    while (pos < bytes_.size()) {
      const std::size_t eol = bytes_.find('\n', pos);
      const std::string_view line = bytes_.substr(pos, eol - pos);
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("record without '='", pos);
      const std::string_view key = line.substr(0, eq);
      const std::string_view value = line.substr(eq + 1);
      const std::size_t value_at = pos + eq + 1;

      const auto it = std::find(kKeys.begin(), kKeys.end(), key);
      if (it == kKeys.end()) throw ParseError("unknown field '" + std::string(key) + "'", pos);
      const int index = static_cast<int>(it - kKeys.begin());
      if (index == last_key) throw ParseError("duplicate field '" + std::string(key) + "'", pos);
      if (index < last_key) throw ParseError("field '" + std::string(key) + "' out of order", pos);
      last_key = index;
      seen[static_cast<std::size_t>(index)] = true;

      switch (index) {
        case 0: out.alice_basis = parse_basis(value, value_at); break;
        case 1: out.channel_shape = parse_shape(value, value_at); break;
        case 2: out.det_abs = parse_real(value, value_at); break;
        case 3: m0_ = parse_real(value, value_at); break;
        case 4: m1_ = parse_real(value, value_at); break;
        case 5: out.profile_kappas = parse_list(value, value_at); break;
        case 6: out.protocol = parse_proto(value, value_at); break;
        case 7: out.s = parse_real(value, value_at); break;
        case 8: out.version = parse_int(value, value_at); break;
      }
      pos = eol + 1;
    }

    for (std::size_t i = 0; i < kKeys.size(); ++i) {
      if (i == 3 || i == 4) continue;
      if (!seen[i]) throw ParseError("missing field '" + std::string(kKeys[i]) + "'", bytes_.size());
    }
    if (seen[3] != seen[4]) throw ParseError("m0 and m1 must appear together", bytes_.size());
    if (seen[3]) out.measured = std::make_pair(m0_, m1_);
    return out;
  }

 private:
  static double parse_real(std::string_view v, std::size_t at) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
      throw ParseError("malformed number '" + std::string(v) + "'", at);
    }
    return out;
  }

  static int parse_int(std::string_view v, std::size_t at) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
      throw ParseError("malformed integer '" + std::string(v) + "'", at);
    }
    return out;
  }

  static std::vector<double> parse_list(std::string_view v, std::size_t at) {
    std::vector<double> out;
    if (v.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = v.find(',', start);
      const std::string_view item = v.substr(start, comma - start);
      out.push_back(parse_real(item, at + start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  static AliceOutcome parse_basis(std::string_view v, std::size_t at) {
    try {
      return AliceOutcome::parse(v);
    } catch (const RangeError&) {
      throw ParseError("bad alice_basis '" + std::string(v) + "'", at);
    }
  }

  static ChannelShape parse_shape(std::string_view v, std::size_t at) {
    try {
      return parse_channel_shape(v);
    } catch (const RangeError&) {
      throw ParseError("bad channel_shape '" + std::string(v) + "'", at);
    }
  }

  static Protocol parse_proto(std::string_view v, std::size_t at) {
    try {
      return parse_protocol(v);
    } catch (const RangeError&) {
      throw ParseError("bad protocol '" + std::string(v) + "'", at);
    }
  }

  std::string_view bytes_;
  double m0_ = 0.0;
  double m1_ = 0.0;
};

// For Bob component k of outcome (w0, w1): which information amplitude and
// which channel slot produce it.
struct Term {
  int info;
  int slot;
};

std::array<Term, 2> branch_terms(ChannelShape shape, AliceOutcome o) {
  const ShapeLayout l = layout(shape);
  std::array<Term, 2> out{};
  for (int k = 0; k < 2; ++k) {
    bool found = false;
    for (int i = 0; i < 2 && !found; ++i) {
      const int basis = 2 * (o.wire1() ^ i) + k;
      for (int slot = 0; slot < 2; ++slot) {
        if (l.slots[static_cast<std::size_t>(slot)] == basis) {
          out[static_cast<std::size_t>(k)] = {i, slot};
          found = true;
        }
      }
    }
  }
  return out;
}

struct Candidate {
  RecoveryResult result;
  bool valid = false;
};

Candidate try_root(double m0, double m1, const ClassicalPayload& payload, DeformationParam p,
                   double scale, std::array<double, 2> slot_sq) {
  Candidate c;
  const bool deformed_channel = payload.protocol != Protocol::kPlain;
  const bool deformed_info = payload.protocol == Protocol::kCase2;
  const auto terms = branch_terms(payload.channel_shape, payload.alice_basis);
  const std::array<double, 2> m{m0, m1};

  std::array<double, 2> info_sq{};
  for (std::size_t k = 0; k < 2; ++k) {
    const Term t = terms[k];
    const double denom = scale * slot_sq[static_cast<std::size_t>(t.slot)];
    info_sq[static_cast<std::size_t>(t.info)] = 2.0 * m[k] / denom;
  }

  try {
    std::array<double, 2> info{};
    for (std::size_t i = 0; i < 2; ++i) {
      const double mag = std::sqrt(info_sq[i]);
      info[i] = deformed_info ? qnumber_inverse(mag, p) : mag;
    }
    std::array<double, 2> chan{};
    for (std::size_t j = 0; j < 2; ++j) {
      const double mag = std::sqrt(slot_sq[j]);
      chan[j] = deformed_channel ? qnumber_inverse(mag, p) : mag;
    }
    c.result.abs_alpha0 = info[0];
    c.result.abs_alpha1 = info[1];
    c.result.abs_a = chan[0];
    c.result.abs_b = chan[1];
    c.result.residual = std::fabs(info[0] * info[0] + info[1] * info[1] - 1.0);
    c.result.channel_residual = std::fabs(chan[0] * chan[0] + chan[1] * chan[1] - 1.0);
    c.valid = c.result.residual <= kRecoveryTol && c.result.channel_residual <= kRecoveryTol;
  } catch (const DomainError&) {
    c.result.residual = std::numeric_limits<double>::infinity();
    c.valid = false;
  }
  return c;
}

}  // namespace

std::size_t expected_kappa_count(Protocol protocol) {
  switch (protocol) {
    case Protocol::kPlain: return 0;
    case Protocol::kCase1: return 2;
    case Protocol::kCase2: return 3;
  }
  return 0;
}

void ClassicalPayload::validate() const {
  if (version != kPayloadVersion) {
    throw ValidationError("unsupported payload version " + std::to_string(version));
  }
  if (!(std::isfinite(s) && s >= 0.0 && s <= 1.0)) throw ValidationError("s outside [0, 1]");
  if (!finite_nonneg(det_abs)) throw ValidationError("det_abs must be finite and non-negative");
  if (profile_kappas.size() != expected_kappa_count(protocol)) {
    throw ValidationError("protocol " + std::string(to_string(protocol)) + " carries " +
                          std::to_string(expected_kappa_count(protocol)) + " profile exponents, got " +
                          std::to_string(profile_kappas.size()));
  }
  for (double k : profile_kappas) {
    if (!std::isfinite(k)) throw ValidationError("non-finite profile exponent");
  }
  if (measured && !(finite_nonneg(measured->first) && finite_nonneg(measured->second))) {
    throw ValidationError("measured statistics must be finite and non-negative");
  }
}

ClassicalPayload make_payload(const InfoQubit& /*info*/, const ChannelSpec& channel,
                              const ProfileSet& profiles, Protocol protocol,
                              AliceOutcome alice_basis,
                              std::optional<std::pair<double, double>> measured) {
  ClassicalPayload out;
  out.protocol = protocol;
  out.alice_basis = alice_basis;
  out.channel_shape = channel.shape;
  out.measured = measured;
  const DeformationParam p = channel.p;
  out.s = p.s();
  if (protocol == Protocol::kPlain) {
    out.det_abs = std::fabs(channel.a * channel.b);
    return out;
  }
  const double product = eval(profiles.omega, p) * eval(profiles.delta, p);
  out.det_abs = product * std::fabs(qnumber(channel.a, p) * qnumber(channel.b, p));
  out.profile_kappas = {exponent_descriptor(profiles.omega, p),
                        exponent_descriptor(profiles.delta, p)};
  if (protocol == Protocol::kCase2) {
    out.profile_kappas.push_back(exponent_descriptor(profiles.gamma, p));
  }
  return out;
}

std::string encode(const ClassicalPayload& payload) {
  payload.validate();
  std::string out;
  auto record = [&out](std::string_view key, const std::string& value) {
    out.append(key).push_back('=');
    out.append(value).push_back('\n');
  };
  record("alice_basis", payload.alice_basis.str());
  record("channel_shape", std::string(to_string(payload.channel_shape)));
  record("det_abs", format_real(payload.det_abs));
  if (payload.measured) {
    record("m0", format_real(payload.measured->first));
    record("m1", format_real(payload.measured->second));
  }
  std::string kappas;
  for (std::size_t i = 0; i < payload.profile_kappas.size(); ++i) {
    if (i > 0) kappas.push_back(',');
    kappas += format_real(payload.profile_kappas[i]);
  }
  record("profile_kappas", kappas);
  record("protocol", std::string(to_string(payload.protocol)));
  record("s", format_real(payload.s));
  record("version", std::to_string(payload.version));
  return out;
}

ClassicalPayload decode(std::string_view bytes) {
  ClassicalPayload out = Parser(bytes).parse();
  out.validate();
  const std::string canonical = encode(out);
  if (canonical != bytes) {
    const auto mismatch = std::mismatch(canonical.begin(), canonical.end(), bytes.begin(), bytes.end());
    throw ParseError("payload is not in canonical form",
                     static_cast<std::size_t>(mismatch.second - bytes.begin()));
  }
  return out;
}

RecoveryResult recover_amplitudes(double m0, double m1, const ClassicalPayload& payload) {
  payload.validate();
  if (!finite_nonneg(m0) || !finite_nonneg(m1)) {
    throw ValidationError("measured statistics must be finite and non-negative");
  }
  if (payload.det_abs > 0.5 + kExactTol) {
    throw ValidationError("det_abs " + std::to_string(payload.det_abs) + " exceeds 1/2");
  }
  const DeformationParam p = DeformationParam::from_s(payload.s);

  // Products of the bound profiles as Bob reconstructs them from the exponents.
  double channel_product = 1.0;
  double info_product = 1.0;
  if (payload.protocol != Protocol::kPlain) {
    channel_product = std::exp(p.s() * (payload.profile_kappas[0] + payload.profile_kappas[1]));
  }
  if (payload.protocol == Protocol::kCase2) info_product = std::exp(p.s() * payload.profile_kappas[2]);

  // Squared (deformed, unscaled) channel magnitudes t satisfy
  // t+ + t- = 1/K and t+ t- = (det/K)^2.
  const double sum = 1.0 / channel_product;
  const double prod = payload.det_abs / channel_product;
  double disc = sum * sum - 4.0 * prod * prod;
  if (disc < -kExactTol) {
    throw InconsistentStatistics("determinant is incompatible with the channel normalization");
  }
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  const double t_hi = 0.5 * (sum + root);
  const double t_lo = 0.5 * (sum - root);
  if (!(t_lo > 0.0)) throw InconsistentStatistics("payload describes an unentangled channel");

  const double scale = channel_product * info_product;
  std::vector<Candidate> candidates;
  candidates.push_back(try_root(m0, m1, payload, p, scale, {t_hi, t_lo}));
  if (root > 0.0) candidates.push_back(try_root(m0, m1, payload, p, scale, {t_lo, t_hi}));

  std::vector<const Candidate*> consistent;
  for (const auto& c : candidates) {
    if (c.valid) consistent.push_back(&c);
  }
  if (consistent.empty()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
      best = std::min(best, std::max(c.result.residual, c.result.channel_residual));
    }
    throw InconsistentStatistics("no root reproduces the statistics (best residual " +
                                 std::to_string(best) + ")");
  }
  if (consistent.size() == 1) return consistent.front()->result;

  const auto worst = [](const Candidate* c) {
    return std::max(c->result.residual, c->result.channel_residual);
  };
  if (worst(consistent[1]) < worst(consistent[0])) std::swap(consistent[0], consistent[1]);
  RecoveryResult out = consistent[0]->result;
  out.ambiguous = true;
  out.alternate = std::make_pair(consistent[1]->result.abs_alpha0, consistent[1]->result.abs_alpha1);
  return out;
}

bool validate_key(double m0, double m1, const ClassicalPayload& payload) noexcept {
  try {
    const RecoveryResult r = recover_amplitudes(m0, m1, payload);
    return r.residual <= kRecoveryTol && r.channel_residual <= kRecoveryTol;
  } catch (...) {
    return false;
  }
}

}  // namespace qtele
