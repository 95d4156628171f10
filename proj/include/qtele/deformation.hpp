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

#include <utility>

#include "qtele/amplitudes.hpp"
#include "qtele/qnum.hpp"

namespace qtele {

enum class ProfileKind { kPower };

/// A positive function of q standing in for one of the free functions of the
/// deformation: f(q) = scale * q^kappa. Unbound profiles have scale 1, so
/// f(1) = 1.
struct DeformationProfile {
  ProfileKind kind = ProfileKind::kPower;
  double kappa = 0.0;
  double scale = 1.0;

  friend bool operator==(const DeformationProfile&, const DeformationProfile&) = default;
};

double eval(const DeformationProfile& profile, DeformationParam p);

/// The profile as a pure power q^e, e = kappa + ln(scale)/s. This is the
/// exponent that goes on the wire. At s = 0 every profile evaluates to 1 and
/// the descriptor is kappa.
double exponent_descriptor(const DeformationProfile& profile, DeformationParam p);

/// Inverse of exponent_descriptor: the profile q^e.
DeformationProfile profile_from_descriptor(double exponent);

/// The functions attached to each oscillator pair. psi/beta deform a generic
/// bipartite state, omega/delta the teleportation channel and gamma the
/// information qubit.
struct ProfileSet {
  DeformationProfile psi;
  DeformationProfile beta;
  DeformationProfile omega;
  DeformationProfile delta;
  DeformationProfile gamma;
};

/// psi*beta forced by unit normalization: 1 / sum_ij [a_ij]^2.
double product_for_state(const AmplitudeMatrix& amps, DeformationParam p);

/// psi*beta for any of the four deformed Bell-like states, 1/(2 [1/sqrt2]^2).
double product_for_bell_basis(DeformationParam p);

/// gamma forced by normalization of the deformed information qubit.
double gamma_for_info(double alpha0, double alpha1, DeformationParam p);

/// Split a required product P into sqrt(P) q^kappa and sqrt(P) q^-kappa.
/// Throws DomainError for P <= 0 or non-finite input.
std::pair<DeformationProfile, DeformationProfile> split_product(double product, double kappa);

}  // namespace qtele
