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

#include <cstdint>
#include <string>
#include <vector>

namespace qtele {

enum class CheckStatus { kPass, kFail, kInfo };

struct CheckLine {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckLine> lines;

  /// No FAIL lines. INFO lines never count against the report.
  bool all_passed() const;
  /// One line per check, "PASS|FAIL|INFO  name  detail", then a summary.
  std::string render() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int draws = 200;
  /// Tolerance for identities that are exact in real arithmetic.
  double tolerance = 1e-12;
};

/// Runs every property suite with a generator seeded from options.seed.
/// Identical options give byte-identical reports. Throws RangeError for
/// draws < 1.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace qtele
