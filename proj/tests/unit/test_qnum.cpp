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
#include <limits>

#include "qtele/errors.hpp"
#include "qtele/qnum.hpp"
#include "qtele/random.hpp"

namespace qtele {
namespace {

const DeformationParam kUnit = DeformationParam::from_s(1.0);

TEST(DeformationParamTest, Range) {
  EXPECT_EQ(new_param(0.0).s(), 0.0);
  EXPECT_DOUBLE_EQ(new_param(0.0).q(), 1.0);
  EXPECT_NEAR(new_param(1.0).q(), 2.718281828459045, 1e-15);
  EXPECT_TRUE(new_param(0.0).undeformed());
  EXPECT_FALSE(new_param(0.2).undeformed());
  EXPECT_THROW(new_param(1.5), RangeError);
  EXPECT_THROW(new_param(-0.1), RangeError);
  EXPECT_THROW(new_param(std::numeric_limits<double>::quiet_NaN()), RangeError);
}

TEST(QNumberTest, UndeformedIsIdentity) {
  for (double x : {-7.5, -1.0, 0.0, 0.3, 1.0, 2.0, 123.25}) {
    EXPECT_EQ(qnumber(x, DeformationParam()), x);
  }
}

TEST(QNumberTest, FixedPoints) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto p = new_param(rng.unit());
    EXPECT_EQ(qnumber(0.0, p), 0.0);
    EXPECT_NEAR(qnumber(1.0, p), 1.0, 1e-15);
  }
}

TEST(QNumberTest, FrozenValues) {
  EXPECT_NEAR(qnumber(2.0, kUnit), 3.086161269630488, 1e-12);
  EXPECT_NEAR(qnumber(kInvSqrt2, kUnit), 0.653099358031072, 1e-12);
  EXPECT_NEAR(qnumber(0.6, kUnit), 0.5417400744584405, 1e-12);
  EXPECT_NEAR(qnumber(0.8, kUnit), 0.7557054800412365, 1e-12);
}

TEST(QNumberTest, RejectsNonFinite) {
  EXPECT_THROW(qnumber(std::numeric_limits<double>::infinity(), kUnit), DomainError);
  EXPECT_THROW(qnumber(std::numeric_limits<double>::quiet_NaN(), kUnit), DomainError);
}

TEST(QNumberTest, OddAndMonotone) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto p = new_param(rng.uniform(0.01, 1.0));
    const double x = rng.uniform(-5.0, 5.0);
    EXPECT_NEAR(qnumber(-x, p), -qnumber(x, p), 1e-12 * std::max(1.0, std::fabs(qnumber(x, p))));
    EXPECT_LT(qnumber(x, p), qnumber(x + 1e-3, p));
  }
}

TEST(QNumberTest, SmallDeformationLimit) {
  const auto p = new_param(1e-8);
  for (double x : {-3.0, -0.4, 0.25, 0.9, 4.0}) EXPECT_NEAR(qnumber(x, p), x, 1e-6);
}

TEST(QNumberInverseTest, RoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = new_param(rng.unit());
    const double x = rng.uniform(-1.0, 1.0);
    EXPECT_NEAR(qnumber_inverse(qnumber(x, p), p), x, 1e-13);
  }
  EXPECT_EQ(qnumber_inverse(0.0, kUnit), 0.0);
  EXPECT_NEAR(qnumber_inverse(1.0, kUnit), 1.0, 1e-14);
}

TEST(QNumberInverseTest, OutOfRange) {
  EXPECT_THROW(qnumber_inverse(1.01, kUnit), DomainError);
  EXPECT_THROW(qnumber_inverse(-1.5, kUnit), DomainError);
  EXPECT_NEAR(qnumber_inverse(1.0 + 1e-13, kUnit), 1.0, 1e-12);
}

}  // namespace
}  // namespace qtele
