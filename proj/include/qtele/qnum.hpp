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

#include <cmath>

namespace qtele {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// The deformation parameter. Only s is stored; q = e^s is always derived.
class DeformationParam {
 public:
  /// Undeformed point, s = 0 and q = 1.
  constexpr DeformationParam() = default;

  /// Throws RangeError unless 0 <= s <= 1.
  static DeformationParam from_s(double s);

  constexpr double s() const noexcept { return s_; }
  double q() const noexcept { return std::exp(s_); }
  constexpr bool undeformed() const noexcept { return s_ == 0.0; }

  friend constexpr bool operator==(DeformationParam, DeformationParam) = default;

 private:
  explicit constexpr DeformationParam(double s) : s_(s) {}
  double s_ = 0.0;
};

DeformationParam new_param(double s);

/// q-number [x] = (q^x - q^-x)/(q - q^-1), evaluated as sinh(s x)/sinh(s).
/// Returns x exactly at s = 0. Throws DomainError for non-finite x.
double qnumber(double x, DeformationParam p);

/// Inverse of qnumber restricted to x in [-1, 1], by bisection on the
/// strictly monotone map. |value| may exceed [1] = 1 by at most 1e-12
/// (clamped); anything beyond that throws DomainError.
double qnumber_inverse(double value, DeformationParam p);

}  // namespace qtele
