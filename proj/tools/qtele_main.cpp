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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtele/channel.hpp"
#include "qtele/circuit.hpp"
#include "qtele/errors.hpp"
#include "qtele/sweep.hpp"
#include "qtele/verify.hpp"

namespace {

using nlohmann::json;
using namespace qtele;

constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kIo = 3, kBadPayload = 4 };

class IoError : public Error {
 public:
  using Error::Error;
};

double tolerance_from_env() {
  const char* raw = std::getenv("QTELE_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return 1e-12;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol > 0.0) || !(tol < 1.0)) {
    throw ConfigError("QTELE_TOLERANCE must be a number in (0, 1)");
  }
  return tol;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json recovery_json(const RecoveryResult& r) {
  json j = {{"abs_alpha0", r.abs_alpha0}, {"abs_alpha1", r.abs_alpha1},
            {"abs_a", r.abs_a},           {"abs_b", r.abs_b},
            {"ambiguous", r.ambiguous},   {"residual", r.residual},
            {"channel_residual", r.channel_residual}};
  if (r.alternate) j["alternate"] = {r.alternate->first, r.alternate->second};
  return j;
}

json payload_json(const ClassicalPayload& p) {
  json j = {{"version", p.version},
            {"protocol", std::string(to_string(p.protocol))},
            {"alice_basis", p.alice_basis.str()},
            {"channel_shape", std::string(to_string(p.channel_shape))},
            {"det_abs", p.det_abs},
            {"s", p.s},
            {"profile_kappas", p.profile_kappas}};
  if (p.measured) j["measured"] = {{"m0", p.measured->first}, {"m1", p.measured->second}};
  return j;
}

struct Common {
  std::string protocol = "plain";
  std::string shape = "nu";
  double alpha0 = kInvSqrt2;
  double a00 = kInvSqrt2;
  double s = 0.0;
  double kappa = 0.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--protocol", c.protocol, "plain, case1 or case2")
      ->check(CLI::IsMember({"plain", "case1", "case2"}));
  cmd->add_option("--shape", c.shape, "nu, nu_prime, nu_dprime or nu_tprime")
      ->check(CLI::IsMember({"nu", "nu_prime", "nu_dprime", "nu_tprime"}));
  cmd->add_option("--alpha0", c.alpha0, "information amplitude alpha0");
  cmd->add_option("--a00", c.a00, "channel amplitude a00");
  cmd->add_option("--s", c.s, "deformation s = ln q in [0, 1]");
  cmd->add_option("--kappa", c.kappa, "profile exponent");
}

int cmd_verify(std::int64_t seed, int draws) {
  VerifyOptions opts;
  opts.seed = static_cast<std::uint64_t>(seed);
  opts.draws = draws;
  opts.tolerance = tolerance_from_env();
  const VerifyReport report = run_verify(opts);
  std::cout << report.render();
  return report.all_passed() ? kOk : kChecksFailed;
}

int cmd_sweep(const Common& c, const std::string& var, double lo, double hi, int steps,
              const std::string& basis, const std::string& out) {
  SweepSpec spec;
  spec.variable = parse_sweep_variable(var);
  spec.lo = lo;
  spec.hi = hi;
  spec.steps = steps;
  spec.protocol = parse_protocol(c.protocol);
  spec.shape = parse_channel_shape(c.shape);
  spec.basis = AliceOutcome::parse(basis);
  spec.alpha0 = c.alpha0;
  spec.a00 = c.a00;
  spec.s = c.s;
  spec.kappa = c.kappa;
  const std::string csv = render_csv(spec, run_sweep(spec));
  write_file(out, csv);
  return kOk;
}

int cmd_teleport(const Common& c, const std::string& basis_text, const std::string& out) {
  const Protocol protocol = parse_protocol(c.protocol);
  const AliceOutcome basis = AliceOutcome::parse(basis_text);
  const bool deformed = protocol != Protocol::kPlain;
  if (!deformed && c.s != 0.0) throw ConfigError("plain protocol requires --s 0");
  const DeformationParam p = DeformationParam::from_s(c.s);
  const InfoQubit info = InfoQubit::from_alpha0(c.alpha0);
  const ChannelSpec channel = make_channel(parse_channel_shape(c.shape), c.a00, deformed, p);
  const ProfileSet profiles = bind_profiles(info, channel, protocol, c.kappa);
  const TeleportRecord rec = teleport(info, channel, profiles, protocol);

  const auto measured = bob_stats(rec, basis);
  const ClassicalPayload payload = make_payload(info, channel, profiles, protocol, basis, measured);
  const std::string bytes = encode(payload);
  write_file(out, bytes);

  // Bob's side works from the bytes alone.
  const ClassicalPayload received = decode(read_file(out));
  const RecoveryResult recovered =
      recover_amplitudes(received.measured->first, received.measured->second, received);

  json branches = json::array();
  for (const Branch& b : rec.branches) {
    branches.push_back({{"outcome", b.outcome.str()},
                        {"probability", b.probability},
                        {"bob", {b.bob[0], b.bob[1]}},
                        {"m0", b.m0},
                        {"m1", b.m1}});
  }
  const auto amps = [](const PureState& st) {
    const auto a = st.amplitudes();
    return json(std::vector<double>(a.begin(), a.end()));
  };
  const json report = {
      {"schema_version", kSchemaVersion},
      {"payload_version", kPayloadVersion},
      {"protocol", std::string(to_string(protocol))},
      {"inputs",
       {{"alpha0", info.alpha0()},
        {"alpha1", info.alpha1()},
        {"a00", channel.a},
        {"a11", channel.b},
        {"shape", std::string(to_string(channel.shape))},
        {"s", p.s()},
        {"kappa", c.kappa},
        {"basis", basis.str()}}},
      {"branches", branches},
      {"initial_state", amps(rec.initial_state)},
      {"final_state", amps(rec.final_state)},
      {"fidelity", {{"closed_form", fidelity_closed(info, channel, profiles, protocol)},
                    {"overlap", fidelity_overlap(rec)}}},
      {"payload", {{"path", out}, {"bytes", bytes.size()}}},
      {"recovered", recovery_json(recovered)},
  };
  std::cout << report.dump(2) << '\n';
  return kOk;
}

int cmd_decode(const std::string& in) {
  const ClassicalPayload payload = decode(read_file(in));
  json report = {{"schema_version", kSchemaVersion}, {"payload", payload_json(payload)}};
  if (payload.measured) {
    report["recovered"] =
        recovery_json(recover_amplitudes(payload.measured->first, payload.measured->second, payload));
  }
  std::cout << report.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed-state teleportation simulator"};
  app.require_subcommand(1);

  std::int64_t seed = 1;
  int draws = 200;
  auto* verify = app.add_subcommand("verify", "run every property suite");
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--draws", draws, "random draws per property")->check(CLI::PositiveNumber);

  Common sweep_common;
  std::string var, sweep_out, sweep_basis = "00";
  double lo = 0.0, hi = 1.0;
  int steps = 2;
  auto* sweep = app.add_subcommand("sweep", "write a CSV parameter sweep");
  add_common(sweep, sweep_common);
  sweep->add_option("--var", var, "s, a00 or alpha0")
      ->required()
      ->check(CLI::IsMember({"s", "a00", "alpha0"}));
  sweep->add_option("--lo", lo)->required();
  sweep->add_option("--hi", hi)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--basis", sweep_basis, "Alice outcome for M0, M1");
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  Common tele_common;
  std::string tele_basis = "00", tele_out;
  auto* tele = app.add_subcommand("teleport", "run one teleportation and write its payload");
  add_common(tele, tele_common);
  tele->add_option("--basis", tele_basis, "Alice outcome 00, 01, 10 or 11");
  tele->add_option("--out", tele_out, "payload output path")->required();

  std::string decode_in;
  auto* dec = app.add_subcommand("decode", "decode a payload file");
  dec->add_option("--in", decode_in, "payload path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(seed, draws);
    if (*sweep) return cmd_sweep(sweep_common, var, lo, hi, steps, sweep_basis, sweep_out);
    if (*tele) return cmd_teleport(tele_common, tele_basis, tele_out);
    if (*dec) return cmd_decode(decode_in);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadPayload;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadPayload;
  } catch (const InconsistentStatistics& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadPayload;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
