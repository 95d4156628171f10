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

namespace qtele {

/// Real amplitudes of a two-qubit state over {|00>, |01>, |10>, |11>},
/// viewed as the 2x2 matrix [[a00, a01], [a10, a11]].
class AmplitudeMatrix {
 public:
  /// Throws DomainError unless the squared entries sum to 1 within 1e-12.
  AmplitudeMatrix(double a00, double a01, double a10, double a11);

  /// Product-like diagonal channel a00|00> + a11|11>.
  static AmplitudeMatrix diagonal(double a00, double a11) { return {a00, 0.0, 0.0, a11}; }

  double a00() const noexcept { return a_[0]; }
  double a01() const noexcept { return a_[1]; }
  double a10() const noexcept { return a_[2]; }
  double a11() const noexcept { return a_[3]; }

  /// Row-major entries, equal to the amplitudes in basis order.
  const std::array<double, 4>& entries() const noexcept { return a_; }

  double det() const noexcept { return a_[0] * a_[3] - a_[1] * a_[2]; }

  friend bool operator==(const AmplitudeMatrix&, const AmplitudeMatrix&) = default;

 private:
  std::array<double, 4> a_;
};

}  // namespace qtele
