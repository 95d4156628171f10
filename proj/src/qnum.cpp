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

#include "qtele/qnum.hpp"

#include <string>

#include "qtele/errors.hpp"

namespace qtele {

DeformationParam DeformationParam::from_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw RangeError("deformation parameter s=" + std::to_string(s) +
                     " outside [0, 1]");
  }
  return DeformationParam(s);
}

DeformationParam new_param(double s) { return DeformationParam::from_s(s); }

double qnumber(double x, DeformationParam p) {
  if (!std::isfinite(x)) throw DomainError("qnumber of non-finite argument");
  if (p.undeformed()) return x;
  const double s = p.s();
  return std::sinh(s * x) / std::sinh(s);
}

double qnumber_inverse(double value, DeformationParam p) {
  if (!std::isfinite(value)) throw DomainError("qnumber_inverse of non-finite value");
  const double mag = std::fabs(value);
  if (mag > 1.0 + 1e-12) {
    throw DomainError("value " + std::to_string(value) + " is not a q-number of [-1, 1]");
  }
  if (p.undeformed()) return value;
  if (mag == 0.0) return 0.0;
  if (mag >= 1.0) return value > 0 ? 1.0 : -1.0;

  double lo = 0.0;
  double hi = 1.0;
  // [lo] <= mag <= [hi] holds throughout.
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (qnumber(mid, p) < mag) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  return value < 0 ? -x : x;
}

}  // namespace qtele
