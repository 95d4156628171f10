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

#include "qtele/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

void require_bell_index(int i) {
  if (i < 0 || i > 3) throw RangeError("Bell index " + std::to_string(i) + " outside 0..3");
}

// Shared scalar sqrt(psi beta) [1/sqrt2] of the deformed Bell objects.
double bell_q_scalar(DeformationParam p) {
  return std::sqrt(product_for_bell_basis(p)) * qnumber(kInvSqrt2, p);
}

// Pattern of Bell state i over {|00>, |01>, |10>, |11>}.
std::array<double, 4> bell_pattern(int i) {
  switch (i) {
    case 0: return {1.0, 0.0, 0.0, 1.0};
    case 1: return {0.0, 1.0, 1.0, 0.0};
    case 2: return {0.0, 1.0, -1.0, 0.0};
    default: return {1.0, 0.0, 0.0, -1.0};
  }
}

// Unscaled generator of Bell matrix i: I, sigma1, i sigma2, sigma3.
GeneratorMatrix bell_generator(int i) {
  if (i == 0) return GeneratorMatrix::identity();
  if (i == 2) return kI * GeneratorMatrix::pauli(2);
  return GeneratorMatrix::pauli(i);
}

// (-1)^{((i^3 + j^3) - (i + j))/4} for i == j; integral for i in {1, 2, 3}.
double anticommutator_sign(int i) {
  const int e = (2 * i * i * i - 2 * i) / 4;
  return (e % 2 == 0) ? 1.0 : -1.0;
}

IdentityCheck check(std::string name, const GeneratorMatrix& lhs, const GeneratorMatrix& rhs,
                    double tol) {
  const double err = lhs.max_abs_diff(rhs);
  return {std::move(name), err, err <= tol};
}

std::string pair_name(const char* what, int i, int j) {
  return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Checks [X_i, X_j] = comm_coef * sum_k eps_ijk X_k and
// {X_i, X_j} = anti_coef(i) * delta_ij * I for X = gens[1..3].
void check_relations(const std::string& prefix, const std::array<GeneratorMatrix, 4>& gens,
                     Complex comm_coef, bool sign_by_parity, Complex anti_coef,
                     bool anti_sign_pattern, double tol, std::vector<IdentityCheck>& out) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      GeneratorMatrix rhs;
      for (int k = 1; k <= 3; ++k) {
        const int eps = levi_civita(i, j, k);
        if (eps == 0) continue;
        Complex c = comm_coef * static_cast<double>(eps);
        if (sign_by_parity && (i + j) % 2 != 0) c = -c;
        rhs = rhs + c * gens[static_cast<std::size_t>(k)];
      }
      out.push_back(check(prefix + pair_name("commutator", i, j),
                          commutator(gens[static_cast<std::size_t>(i)],
                                     gens[static_cast<std::size_t>(j)]),
                          rhs, tol));

      GeneratorMatrix anti_rhs;
      if (i == j) {
        Complex c = anti_coef;
        if (anti_sign_pattern) c *= anticommutator_sign(i);
        anti_rhs = c * GeneratorMatrix::identity();
      }
      out.push_back(check(prefix + pair_name("anticommutator", i, j),
                          anticommutator(gens[static_cast<std::size_t>(i)],
                                         gens[static_cast<std::size_t>(j)]),
                          anti_rhs, tol));
    }
  }
}

}  // namespace

AmplitudeMatrix::AmplitudeMatrix(double a00, double a01, double a10, double a11)
    : a_{a00, a01, a10, a11} {
  double sum = 0.0;
  for (double a : a_) {
    if (!std::isfinite(a)) throw DomainError("non-finite amplitude");
    sum += a * a;
  }
  if (std::fabs(sum - 1.0) > kExactTol) {
    throw DomainError("amplitudes are not normalized (sum of squares " + std::to_string(sum) + ")");
  }
}

GeneratorMatrix GeneratorMatrix::pauli(int k) {
  switch (k) {
    case 1: return {0.0, 1.0, 1.0, 0.0};
    case 2: return {0.0, -kI, kI, 0.0};
    case 3: return {1.0, 0.0, 0.0, -1.0};
    default: throw RangeError("Pauli index " + std::to_string(k) + " outside 1..3");
  }
}

bool GeneratorMatrix::is_real(double tol) const {
  return std::all_of(m_.begin(), m_.end(), [tol](Scalar z) { return std::fabs(z.imag()) <= tol; });
}

GeneratorMatrix GeneratorMatrix::operator+(const GeneratorMatrix& o) const {
  return {m_[0] + o.m_[0], m_[1] + o.m_[1], m_[2] + o.m_[2], m_[3] + o.m_[3]};
}

GeneratorMatrix GeneratorMatrix::operator-(const GeneratorMatrix& o) const {
  return {m_[0] - o.m_[0], m_[1] - o.m_[1], m_[2] - o.m_[2], m_[3] - o.m_[3]};
}

GeneratorMatrix GeneratorMatrix::operator*(const GeneratorMatrix& o) const {
  return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
          m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

GeneratorMatrix GeneratorMatrix::operator*(Scalar c) const {
  return {m_[0] * c, m_[1] * c, m_[2] * c, m_[3] * c};
}

double GeneratorMatrix::max_abs_diff(const GeneratorMatrix& o) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(m_[i] - o.m_[i]));
  return worst;
}

GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  return a * b - b * a;
}

GeneratorMatrix anticommutator(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  return a * b + b * a;
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1, 2, 3) are its cyclic shifts.
  if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) return 1;
  return -1;
}

bool is_entangled(const AmplitudeMatrix& a) { return std::fabs(a.det()) > kExactTol; }

GeneratorMatrix bell_matrix(int i) {
  require_bell_index(i);
  return Complex(kInvSqrt2) * bell_generator(i);
}

GeneratorMatrix bell_q_matrix(int i, DeformationParam p) {
  require_bell_index(i);
  return Complex(bell_q_scalar(p)) * bell_generator(i);
}

GeneratorMatrix q_amplitude_matrix(const AmplitudeMatrix& a, DeformationParam p) {
  const double scale = std::sqrt(product_for_state(a, p));
  return {scale * qnumber(a.a00(), p), scale * qnumber(a.a01(), p),
          scale * qnumber(a.a10(), p), scale * qnumber(a.a11(), p)};
}

std::vector<IdentityCheck> verify_generator_algebra(std::optional<DeformationParam> p,
                                                    double tol) {
  std::vector<IdentityCheck> out;

  std::array<GeneratorMatrix, 4> a;
  for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = bell_matrix(i);
  check_relations("A.", a, Complex(std::numbers::sqrt2), true, 1.0, true, tol, out);

  // A'_1 = sqrt2 A_1, A'_2 = sqrt2 e^{-i pi/2} A_2, A'_3 = sqrt2 A_3.
  std::array<GeneratorMatrix, 4> rescaled = a;
  rescaled[1] = Complex(std::numbers::sqrt2) * a[1];
  rescaled[2] = Complex(std::numbers::sqrt2) * std::exp(-kI * (std::numbers::pi / 2)) * a[2];
  rescaled[3] = Complex(std::numbers::sqrt2) * a[3];
  check_relations("A'.", rescaled, 2.0 * kI, false, 2.0, false, tol, out);

  if (!p) return out;

  std::array<GeneratorMatrix, 4> aq;
  for (int i = 0; i < 4; ++i) aq[static_cast<std::size_t>(i)] = bell_q_matrix(i, *p);
  const double product = product_for_bell_basis(*p);
  const double half = qnumber(kInvSqrt2, *p);
  const double scalar = std::sqrt(product) * half;
  // The anticommutator carries [1/sqrt2] squared; with a single power it
  // would not reduce to the undeformed relation at q = 1.
  check_relations("Aq.", aq, Complex(2.0 * scalar), true, Complex(2.0 * product * half * half),
                  true, tol, out);

  std::array<GeneratorMatrix, 4> aq_rescaled = aq;
  aq_rescaled[1] = Complex(1.0 / scalar) * aq[1];
  aq_rescaled[2] = Complex(1.0 / scalar) * std::exp(-kI * (std::numbers::pi / 2)) * aq[2];
  aq_rescaled[3] = Complex(1.0 / scalar) * aq[3];
  check_relations("Aq'.", aq_rescaled, 2.0 * kI, false, 2.0, false, tol, out);

  return out;
}

PureState deformed_bipartite_state(const AmplitudeMatrix& a, DeformationParam p) {
  const double scale = std::sqrt(product_for_state(a, p));
  std::vector<double> v;
  v.reserve(4);
  for (double x : a.entries()) v.push_back(scale * qnumber(x, p));
  return PureState(std::move(v));
}

bool q_unentangled_check(const AmplitudeMatrix& a, DeformationParam p) {
  const double q = p.q();
  auto diff = [q](double x) { return std::pow(q, x) - std::pow(q, -x); };
  const double lhs = diff(a.a00()) * diff(a.a11());
  const double rhs = diff(a.a01()) * diff(a.a10());
  return std::fabs(lhs - rhs) <= kExactTol;
}

PureState bell_state(int i) {
  require_bell_index(i);
  const auto pattern = bell_pattern(i);
  std::vector<double> v(pattern.begin(), pattern.end());
  for (double& x : v) x *= kInvSqrt2;
  return PureState(std::move(v));
}

PureState bell_q_state(int i, DeformationParam p) {
  require_bell_index(i);
  const auto pattern = bell_pattern(i);
  const double c = bell_q_scalar(p);
  std::vector<double> v(pattern.begin(), pattern.end());
  for (double& x : v) x *= c;
  return PureState(std::move(v));
}

BellCoefficients bell_q_decompose(const PureState& mu, DeformationParam p) {
  if (mu.num_qubits() != 2) throw DomainError("Bell decomposition needs a two-qubit state");
  if (mu[1] != 0.0 || mu[2] != 0.0) {
    throw DomainError("only c00|00> + c11|11> states are supported");
  }
  if (mu[0] == 0.0 || mu[3] == 0.0) throw DomainError("diagonal amplitudes must be nonzero");
  const double root = std::sqrt(product_for_bell_basis(p));
  const double d00 = mu[0] / root;
  const double d11 = mu[3] / root;
  const double denom = 2.0 * qnumber(kInvSqrt2, p);
  return BellCoefficients{{(d00 + d11) / denom, 0.0, 0.0, (d00 - d11) / denom}};
}

PureState deformed_diagonal_state(double a00, double a11, DeformationParam p) {
  const double root = std::sqrt(product_for_bell_basis(p));
  return PureState({root * qnumber(a00, p), 0.0, 0.0, root * qnumber(a11, p)});
}

PureState bell_q_reconstruct(const BellCoefficients& c, DeformationParam p) {
  PureState out({0.0, 0.0, 0.0, 0.0});
  for (int i = 0; i < 4; ++i) {
    out = out.plus(bell_q_state(i, p).scaled(c.b[static_cast<std::size_t>(i)]));
  }
  return out;
}

PureState js_qubit(int n1, bool deformed, DeformationParam p, const DeformationProfile& profile) {
  if (n1 != 0 && n1 != 1) throw DomainError("n1 must be 0 or 1");
  // Excitation in oscillator 1 is |0>, in oscillator 2 is |1>.
  std::vector<double> v = (n1 == 1) ? std::vector<double>{1.0, 0.0} : std::vector<double>{0.0, 1.0};
  if (deformed) {
    const double factor = std::sqrt(eval(profile, p));
    for (double& x : v) x *= factor;
  }
  return PureState(std::move(v));
}

}  // namespace qtele
