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

#include <string>
#include <string_view>
#include <vector>

#include "qtele/circuit.hpp"

namespace qtele {

enum class SweepVariable { kS, kA00, kAlpha0 };

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view text);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kA00;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  Protocol protocol = Protocol::kPlain;
  ChannelShape shape = ChannelShape::kNu;
  AliceOutcome basis{0};
  double alpha0 = kInvSqrt2;
  double a00 = kInvSqrt2;
  double s = 0.0;
  double kappa = 0.0;

  /// Throws RangeError for lo >= hi, steps < 2 or a range outside the
  /// variable's domain (s in [0, 1], amplitudes in [-1, 1]).
  void validate() const;
};

struct SweepRow {
  double value;
  double fidelity;
  double m0;
  double m1;
};

/// One row per grid point lo + (hi - lo) i / (steps - 1), in order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header plus one line per row; reals printed with 17 significant digits.
std::string render_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace qtele
