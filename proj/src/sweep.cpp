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

#include "qtele/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "qtele/errors.hpp"

namespace qtele {

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kS: return "s";
    case SweepVariable::kA00: return "a00";
    case SweepVariable::kAlpha0: return "alpha0";
  }
  return "s";
}

SweepVariable parse_sweep_variable(std::string_view text) {
  for (auto v : {SweepVariable::kS, SweepVariable::kA00, SweepVariable::kAlpha0}) {
    if (to_string(v) == text) return v;
  }
  throw RangeError("unknown sweep variable '" + std::string(text) + "'");
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw RangeError("sweep needs lo < hi");
  if (steps < 2) throw RangeError("sweep needs at least 2 steps");
  const double bound_lo = variable == SweepVariable::kS ? 0.0 : -1.0;
  if (lo < bound_lo || hi > 1.0) {
    throw RangeError("sweep range outside the domain of " + std::string(to_string(variable)));
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const double value = spec.lo + (spec.hi - spec.lo) * i / (spec.steps - 1);
    double alpha0 = spec.alpha0;
    double a00 = spec.a00;
    double s = spec.s;
    switch (spec.variable) {
      case SweepVariable::kS: s = value; break;
      case SweepVariable::kA00: a00 = value; break;
      case SweepVariable::kAlpha0: alpha0 = value; break;
    }
    const bool deformed = spec.protocol != Protocol::kPlain;
    const DeformationParam p = deformed ? DeformationParam::from_s(s) : DeformationParam();
    const InfoQubit info = InfoQubit::from_alpha0(alpha0);
    const ChannelSpec channel = make_channel(spec.shape, a00, deformed, p);
    const ProfileSet profiles = bind_profiles(info, channel, spec.protocol, spec.kappa);
    const auto [m0, m1] = bob_stats(teleport(info, channel, profiles, spec.protocol), spec.basis);
    rows.push_back({value, fidelity_closed(info, channel, profiles, spec.protocol), m0, m1});
  }
  return rows;
}

std::string render_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::string out(to_string(spec.variable));
  out += ",F,M0,M1,M0M1\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.value, r.fidelity, r.m0,
                  r.m1, r.m0 * r.m1);
    out += buf;
  }
  return out;
}

}  // namespace qtele
