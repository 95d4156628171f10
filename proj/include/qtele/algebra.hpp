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
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qtele/amplitudes.hpp"
#include "qtele/deformation.hpp"
#include "qtele/qnum.hpp"
#include "qtele/state.hpp"

namespace qtele {

/// Generic tolerance for identities that hold exactly in real arithmetic.
inline constexpr double kExactTol = 1e-12;

/// 2x2 complex matrix, row-major. Complex entries only show up for sigma_2
/// and the e^{-i pi/2} rescaling.
class GeneratorMatrix {
 public:
  using Scalar = std::complex<double>;

  constexpr GeneratorMatrix() = default;
  constexpr GeneratorMatrix(Scalar m00, Scalar m01, Scalar m10, Scalar m11)
      : m_{m00, m01, m10, m11} {}

  static GeneratorMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static GeneratorMatrix pauli(int k);  // k in {1, 2, 3}
  static GeneratorMatrix zero() { return {}; }

  Scalar operator()(int r, int c) const { return m_[static_cast<std::size_t>(2 * r + c)]; }
  Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool is_real(double tol = kExactTol) const;

  GeneratorMatrix operator+(const GeneratorMatrix& o) const;
  GeneratorMatrix operator-(const GeneratorMatrix& o) const;
  GeneratorMatrix operator*(const GeneratorMatrix& o) const;
  GeneratorMatrix operator*(Scalar c) const;
  friend GeneratorMatrix operator*(Scalar c, const GeneratorMatrix& m) { return m * c; }

  /// Largest entrywise modulus of the difference.
  double max_abs_diff(const GeneratorMatrix& o) const;

 private:
  std::array<Scalar, 4> m_{};
};

GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b);
GeneratorMatrix anticommutator(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Levi-Civita symbol on {1, 2, 3}.
int levi_civita(int i, int j, int k);

/// Determinant criterion: entangled iff |det A| > 1e-12.
bool is_entangled(const AmplitudeMatrix& a);

/// A_0 = I/sqrt2, A_1 = sigma1/sqrt2, A_2 = i sigma2/sqrt2, A_3 = sigma3/sqrt2.
GeneratorMatrix bell_matrix(int i);

/// sqrt(psi beta) [1/sqrt2] {I, sigma1, i sigma2, sigma3}, with psi beta bound
/// by the Bell-basis normalization.
GeneratorMatrix bell_q_matrix(int i, DeformationParam p);

/// A_q = sqrt(psi beta) [[a00], [a01]; [a10], [a11]] with psi beta from
/// product_for_state.
GeneratorMatrix q_amplitude_matrix(const AmplitudeMatrix& a, DeformationParam p);

struct IdentityCheck {
  std::string name;
  double max_error;
  bool passed;
};

/// Entrywise check of the generator commutation/anticommutation relations,
/// the SU(2) rescaling, and (when p is given) their deformed analogues and the
/// deformed rescaling.
std::vector<IdentityCheck> verify_generator_algebra(std::optional<DeformationParam> p,
                                                    double tol = kExactTol);

/// sqrt(psi beta) ([a00], [a01], [a10], [a11]); unit norm by construction.
PureState deformed_bipartite_state(const AmplitudeMatrix& a, DeformationParam p);

/// Evaluates (q^a00 - q^-a00)(q^a11 - q^-a11) = (q^a01 - q^-a01)(q^a10 - q^-a10)
/// directly, to 1e-12.
bool q_unentangled_check(const AmplitudeMatrix& a, DeformationParam p);

/// Undeformed Bell state |phi_i>.
PureState bell_state(int i);

/// sqrt(psi beta) [1/sqrt2] times the sign pattern of Bell state i.
PureState bell_q_state(int i, DeformationParam p);

struct BellCoefficients {
  std::array<double, 4> b{};
};

/// Coefficients of a c00|00> + c11|11> state over the deformed Bell-like basis.
/// The deformed amplitudes are read off as c_ii / sqrt(psi beta) with the
/// Bell-basis product. Throws DomainError if |01> or |10> carry weight, or if
/// either diagonal amplitude vanishes.
BellCoefficients bell_q_decompose(const PureState& mu, DeformationParam p);

/// sqrt(psi beta) ([a00]|00> + [a11]|11>) with the Bell-basis product, the
/// form the decomposition formulas are written for.
PureState deformed_diagonal_state(double a00, double a11, DeformationParam p);

/// sum_i b_i |phi_i>_q.
PureState bell_q_reconstruct(const BellCoefficients& c, DeformationParam p);

/// Two-oscillator encoding of a qubit: one excitation in oscillator 1 is |0>,
/// in oscillator 2 is |1>. The deformed qubit carries the single-excitation
/// prefactor sqrt(f(q)) of its profile. Throws DomainError unless n1 is 0 or 1.
PureState js_qubit(int n1, bool deformed, DeformationParam p,
                   const DeformationProfile& profile = {});

}  // namespace qtele
