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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtele/algebra.hpp"
#include "qtele/errors.hpp"
#include "qtele/random.hpp"

namespace qtele {
namespace {

using Complex = std::complex<double>;
const DeformationParam kUnit = DeformationParam::from_s(1.0);

TEST(GeneratorMatrixTest, PauliAndLeviCivita) {
  const auto x = GeneratorMatrix::pauli(1), y = GeneratorMatrix::pauli(2);
  const auto z = GeneratorMatrix::pauli(3);
  EXPECT_LT(commutator(x, y).max_abs_diff(Complex(0, 2) * z), 1e-15);
  EXPECT_LT(anticommutator(x, x).max_abs_diff(Complex(2) * GeneratorMatrix::identity()), 1e-15);
  EXPECT_THROW(GeneratorMatrix::pauli(4), RangeError);
  EXPECT_EQ(levi_civita(1, 2, 3), 1);
  EXPECT_EQ(levi_civita(3, 1, 2), 1);
  EXPECT_EQ(levi_civita(2, 1, 3), -1);
  EXPECT_EQ(levi_civita(1, 1, 3), 0);
  EXPECT_FALSE(y.is_real());
  EXPECT_TRUE(z.is_real());
}

TEST(EntanglementTest, Examples) {
  EXPECT_TRUE(is_entangled(AmplitudeMatrix::diagonal(kInvSqrt2, kInvSqrt2)));
  EXPECT_FALSE(is_entangled(AmplitudeMatrix(0.5, 0.5, 0.5, 0.5)));
  EXPECT_TRUE(is_entangled(AmplitudeMatrix::diagonal(0.6, 0.8)));
}

TEST(BellMatrixTest, Undeformed) {
  EXPECT_LT(bell_matrix(0).max_abs_diff(Complex(kInvSqrt2) * GeneratorMatrix::identity()), 1e-15);
  EXPECT_LT(bell_matrix(3).max_abs_diff({kInvSqrt2, 0.0, 0.0, -kInvSqrt2}), 1e-15);
  for (int i = 0; i < 4; ++i) EXPECT_GT(std::abs(bell_matrix(i).det()), 0.1);
  EXPECT_LT(commutator(bell_matrix(1), bell_matrix(2))
                .max_abs_diff(Complex(-std::numbers::sqrt2) * bell_matrix(3)),
            1e-15);
  EXPECT_THROW(bell_matrix(4), RangeError);
}

TEST(BellMatrixTest, Deformed) {
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT(bell_q_matrix(i, {}).max_abs_diff(bell_matrix(i)), 1e-15);
  }
  EXPECT_LT(bell_q_matrix(0, kUnit).max_abs_diff(Complex(kInvSqrt2) * GeneratorMatrix::identity()),
            1e-12);
  const double scalar = std::sqrt(product_for_bell_basis(kUnit)) * qnumber(kInvSqrt2, kUnit);
  EXPECT_LT(commutator(bell_q_matrix(1, kUnit), bell_q_matrix(2, kUnit))
                .max_abs_diff(Complex(-2.0 * scalar) * bell_q_matrix(3, kUnit)),
            1e-12);
}

TEST(GeneratorAlgebraTest, AllIdentitiesHold) {
  for (double s : {0.0, 0.3, 0.7, 1.0}) {
    const auto checks = verify_generator_algebra(DeformationParam::from_s(s));
    EXPECT_EQ(checks.size(), 72u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << " s=" << s;
  }
  EXPECT_EQ(verify_generator_algebra(std::nullopt).size(), 36u);
}

TEST(GeneratorAlgebraTest, DeformedMatchesUndeformedAtZero) {
  const auto checks = verify_generator_algebra(DeformationParam());
  for (std::size_t i = 0; i < 36; ++i) {
    EXPECT_NEAR(checks[i].max_error, checks[i + 36].max_error, 1e-15);
  }
}

TEST(DeformedStateTest, Examples) {
  const auto a = AmplitudeMatrix::diagonal(0.6, 0.8);
  const PureState plain = deformed_bipartite_state(a, {});
  EXPECT_EQ(plain, PureState({0.6, 0.0, 0.0, 0.8}));
  const PureState bell = deformed_bipartite_state(AmplitudeMatrix::diagonal(kInvSqrt2, kInvSqrt2), kUnit);
  EXPECT_LT(bell.max_abs_diff(bell_state(0)), 1e-12);
  const PureState d = deformed_bipartite_state(a, kUnit);
  EXPECT_NEAR(d[0], 0.5826263314872613, 1e-12);
  EXPECT_NEAR(d[3], 0.8127401539592441, 1e-12);
  EXPECT_NEAR(d.squared_norm(), 1.0, 1e-12);
}

TEST(QUnentangledTest, Examples) {
  EXPECT_TRUE(q_unentangled_check(AmplitudeMatrix(0.3, 0.3, std::sqrt(0.41), std::sqrt(0.41)), kUnit));
  EXPECT_FALSE(q_unentangled_check(AmplitudeMatrix::diagonal(kInvSqrt2, kInvSqrt2), kUnit));
}

TEST(QUnentangledTest, AgreesWithDeterminant) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    double v[4], n = 0;
    for (double& x : v) {
      x = rng.uniform(-1, 1);
      n += x * x;
    }
    n = std::sqrt(n);
    const AmplitudeMatrix a(v[0] / n, v[1] / n, v[2] / n, v[3] / n);
    const auto p = DeformationParam::from_s(rng.uniform(0.05, 1.0));
    EXPECT_EQ(q_unentangled_check(a, p), std::abs(q_amplitude_matrix(a, p).det()) <= 1e-12);
  }
}

TEST(BellStateTest, Patterns) {
  EXPECT_EQ(bell_state(0), PureState({kInvSqrt2, 0, 0, kInvSqrt2}));
  const PureState b2 = bell_q_state(2, kUnit);
  EXPECT_EQ(b2[0], 0.0);
  EXPECT_GT(b2[1], 0.0);
  EXPECT_EQ(b2[2], -b2[1]);
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT(bell_q_state(i, {}).max_abs_diff(bell_state(i)), 1e-15);
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(bell_q_state(i, kUnit).inner(bell_q_state(j, kUnit)), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(BellDecomposeTest, FrozenValues) {
  const PureState mu = deformed_diagonal_state(0.6, 0.8, kUnit);
  const auto c = bell_q_decompose(mu, kUnit);
  EXPECT_NEAR(c.b[0], 0.9932987519779107, 1e-12);
  EXPECT_NEAR(c.b[3], -0.16380769859263614, 1e-12);
  EXPECT_EQ(c.b[1], 0.0);
  EXPECT_EQ(c.b[2], 0.0);
  EXPECT_LT(bell_q_reconstruct(c, kUnit).max_abs_diff(mu), 1e-12);
}

TEST(BellDecomposeTest, SpecialCases) {
  const auto bell = bell_q_decompose(PureState({kInvSqrt2, 0, 0, kInvSqrt2}), {});
  EXPECT_NEAR(bell.b[0], 1.0, 1e-15);
  EXPECT_NEAR(bell.b[3], 0.0, 1e-15);
  const auto equal = bell_q_decompose(deformed_diagonal_state(0.5, 0.5, kUnit), kUnit);
  EXPECT_NEAR(equal.b[3], 0.0, 1e-15);
  EXPECT_NEAR(equal.b[0], qnumber(0.5, kUnit) / qnumber(kInvSqrt2, kUnit), 1e-12);
  EXPECT_THROW(bell_q_decompose(PureState({0.6, 0.8, 0, 0}), kUnit), DomainError);
}

TEST(JsQubitTest, Examples) {
  EXPECT_EQ(js_qubit(1, false, {}), PureState({1.0, 0.0}));
  EXPECT_EQ(js_qubit(0, false, {}), PureState({0.0, 1.0}));
  EXPECT_EQ(js_qubit(1, true, {}, {ProfileKind::kPower, 3.0, 1.0}), PureState({1.0, 0.0}));
  const PureState d = js_qubit(1, true, kUnit, {ProfileKind::kPower, 2.0, 1.0});
  EXPECT_NEAR(d[0], std::exp(1.0), 1e-14);
  EXPECT_THROW(js_qubit(2, false, {}), DomainError);
}

TEST(PureStateTest, Basics) {
  EXPECT_THROW(PureState({1.0, 0.0, 0.0}), RangeError);
  const PureState a({0.6, 0.8});
  const PureState b({1.0, 0.0});
  EXPECT_EQ(a.tensor(b), PureState({0.6, 0.0, 0.8, 0.0}));
  EXPECT_EQ(a.tensor(b).num_qubits(), 2u);
  EXPECT_NEAR(a.inner(b), 0.6, 1e-15);
  EXPECT_THROW(a.inner(a.tensor(b)), RangeError);
}

}  // namespace
}  // namespace qtele
