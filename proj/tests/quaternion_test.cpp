// Copyright 2026 The slicegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slicegeo/quaternion.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slicegeo/errors.hpp"
#include "slicegeo/random.hpp"

namespace slicegeo {
namespace {

const Quaternion kI = Quaternion::i();
const Quaternion kJ = Quaternion::j();
const Quaternion kK = Quaternion::k();

TEST(QuaternionTest, HamiltonRules) {
  EXPECT_EQ(kI * kI, Quaternion(-1.0));
  EXPECT_EQ(kJ * kJ, Quaternion(-1.0));
  EXPECT_EQ(kK * kK, Quaternion(-1.0));
  EXPECT_EQ(kI * kJ, kK);
  EXPECT_EQ(kJ * kK, kI);
  EXPECT_EQ(kK * kI, kJ);
  EXPECT_EQ(kJ * kI, -kK);
  EXPECT_EQ(kI * kJ * kK, Quaternion(-1.0));
}

TEST(QuaternionTest, NormIsMultiplicativeAndConjugationReverses) {
  Sampler rng(11);
  for (int n = 0; n < 200; ++n) {
    const Quaternion p = rng.gaussian();
    const Quaternion q = rng.gaussian();
    EXPECT_NEAR((p * q).norm(), p.norm() * q.norm(), 1e-12 * (1.0 + p.norm() * q.norm()));
    EXPECT_LE(max_abs_diff((p * q).conj(), q.conj() * p.conj()), 1e-13);
    EXPECT_NEAR((q * q.conj()).w, q.norm2(), 1e-12);
  }
}

TEST(QuaternionTest, Inverse) {
  const Quaternion q{1.0, -2.0, 0.5, 3.0};
  EXPECT_LE(max_abs_diff(q * q.inverse(), 1.0), 1e-15);
  EXPECT_LE(max_abs_diff(q.inverse() * q, 1.0), 1e-15);
  EXPECT_THROW(Quaternion().inverse(), DomainError);
}

TEST(QuaternionTest, SgnAndExp) {
  EXPECT_EQ(sgn(Quaternion()), Quaternion());
  EXPECT_LE(max_abs_diff(sgn(Quaternion{0, 3, 0, 4}), Quaternion{0, 0.6, 0, 0.8}), 2e-16);
  EXPECT_LE(max_abs_diff(exp(0.5 * std::numbers::pi * kJ), kJ), 1e-15);
  EXPECT_LE(max_abs_diff(exp(Quaternion(1.0)), std::exp(1.0)), 1e-15);
  // exp(x + yI) = e^x (cos y + I sin y).
  const Quaternion q{0.3, 0.0, 0.4, 0.0};
  const Quaternion expected = std::exp(0.3) * (std::cos(0.4) + std::sin(0.4) * kJ);
  EXPECT_LE(max_abs_diff(exp(q), expected), 1e-15);
}

TEST(UnitQuaternionTest, CheckedConstruction) {
  EXPECT_NO_THROW(UnitQuaternion(kK));
  EXPECT_THROW(UnitQuaternion(Quaternion(1.1)), DomainError);
  EXPECT_THROW(UnitQuaternion::normalize(Quaternion(1.1), 1e-9), DomainError);
  const UnitQuaternion u = UnitQuaternion::normalize(Quaternion{0.6, 0.8 + 1e-12, 0, 0}, 1e-9);
  EXPECT_NEAR(u.value().norm(), 1.0, 2e-16);
  EXPECT_EQ(UnitQuaternion().value(), Quaternion(1.0));
}

TEST(UnitQuaternionTest, ProductStaysOnSphere) {
  Sampler rng(3);
  UnitQuaternion acc;
  for (int n = 0; n < 1000; ++n) acc = acc * rng.sphere3();
  EXPECT_NEAR(acc.value().norm(), 1.0, 1e-15);
}

TEST(ImaginaryUnitTest, Validation) {
  EXPECT_EQ(ImaginaryUnit().value(), kI);
  EXPECT_THROW(ImaginaryUnit(Quaternion(1.0)), DomainError);
  EXPECT_THROW(ImaginaryUnit(2.0 * kJ), DomainError);
  const ImaginaryUnit u(kK);
  EXPECT_EQ((-u).value(), -kK);
}

TEST(BallPointTest, RejectsBoundaryAndOutside) {
  EXPECT_NO_THROW(BallPoint(Quaternion{0.5, 0.5, 0.5, 0.4}));
  EXPECT_THROW(BallPoint(Quaternion(1.0)), BoundaryError);
  EXPECT_THROW(BallPoint(Quaternion{0.6, 0.8, 0, 0}), BoundaryError);
  EXPECT_THROW(BallPoint(Quaternion(NAN)), DomainError);
}

TEST(SliceSplitTest, RecomposesAndPicksIForRealPoints) {
  const SliceCoords real = slice_split(Quaternion(-0.25));
  EXPECT_EQ(real.x, -0.25);
  EXPECT_EQ(real.y, 0.0);
  EXPECT_EQ(real.unit.value(), kI);

  Sampler rng(5);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = rng.gaussian();
    const SliceCoords s = slice_split(q);
    EXPECT_GE(s.y, 0.0);
    EXPECT_LE(max_abs_diff(s.compose(), q), 1e-15 * (1.0 + q.norm()) * 4);
  }
}

}  // namespace
}  // namespace slicegeo
