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

#include "qtele/deformation.hpp"

#include <cmath>

#include "qtele/errors.hpp"

namespace qtele {

double eval(const DeformationProfile& profile, DeformationParam p) {
  if (p.undeformed()) return profile.scale;
  return profile.scale * std::exp(p.s() * profile.kappa);
}

double exponent_descriptor(const DeformationProfile& profile, DeformationParam p) {
  if (p.undeformed()) return profile.kappa;
  return profile.kappa + std::log(profile.scale) / p.s();
}

DeformationProfile profile_from_descriptor(double exponent) {
  return DeformationProfile{ProfileKind::kPower, exponent, 1.0};
}

double product_for_state(const AmplitudeMatrix& amps, DeformationParam p) {
  double sum = 0.0;
  for (double a : amps.entries()) {
    const double qa = qnumber(a, p);
    sum += qa * qa;
  }
  if (sum == 0.0) throw DomainError("all deformed amplitudes vanish");
  return 1.0 / sum;
}

double product_for_bell_basis(DeformationParam p) {
  if (p.undeformed()) return 1.0;
  const double h = qnumber(kInvSqrt2, p);
  return 1.0 / (2.0 * h * h);
}

double gamma_for_info(double alpha0, double alpha1, DeformationParam p) {
  const double q0 = qnumber(alpha0, p);
  const double q1 = qnumber(alpha1, p);
  const double sum = q0 * q0 + q1 * q1;
  if (sum == 0.0) throw DomainError("information qubit has no nonzero amplitude");
  return 1.0 / sum;
}

std::pair<DeformationProfile, DeformationProfile> split_product(double product, double kappa) {
  if (!(product > 0.0) || !std::isfinite(product) || !std::isfinite(kappa)) {
    throw DomainError("split_product needs a positive finite product");
  }
  const double root = std::sqrt(product);
  return {DeformationProfile{ProfileKind::kPower, kappa, root},
          DeformationProfile{ProfileKind::kPower, -kappa, root}};
}

}  // namespace qtele
