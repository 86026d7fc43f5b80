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

#include "slicegeo/hmat.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slicegeo/cli/generators.hpp"
#include "slicegeo/errors.hpp"
#include "slicegeo/random.hpp"

namespace slicegeo {
namespace {

using cli::random_m;
using cli::random_sp11;

Sp11AlgebraElement random_algebra(Sampler& rng, double scale = 1.0) {
  return {scale * rng.gaussian().im(), scale * rng.gaussian().im(), scale * rng.gaussian()};
}

TEST(QMat2Test, ProductAndAdjoint) {
  const QMat2 a{Quaternion::i(), 2.0, Quaternion::j(), Quaternion{1, 1, 0, 0}};
  const QMat2 b{1.0, Quaternion::k(), -1.0, 0.5};
  const QMat2 ab = a * b;
  EXPECT_EQ(ab.m11, Quaternion::i() - 2.0);
  EXPECT_EQ(ab.m12, Quaternion::i() * Quaternion::k() + 1.0);
  EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
  EXPECT_EQ(QMat2::identity() * a, a);
}

TEST(Sp11Test, MembershipExamples) {
  EXPECT_TRUE(sp11_check(QMat2::identity()).member);
  EXPECT_EQ(sp11_check(QMat2::identity()).residual, 0.0);
  EXPECT_TRUE(sp11_check(QMat2::i11()).member);
  EXPECT_FALSE(sp11_check(QMat2::diag(1.0, 2.0)).member);
  EXPECT_THROW(Sp11Element(QMat2::diag(1.0, 2.0)), DomainError);
  const double c = std::cosh(0.7);
  const double s = std::sinh(0.7);
  EXPECT_TRUE(sp11_check({c, s, s, c}).member);
}

TEST(Sp11Test, GroupClosureAndInverse) {
  Sampler rng(1);
  for (int n = 0; n < 300; ++n) {
    const Sp11Element a = random_sp11(rng);
    const Sp11Element b = random_sp11(rng);
    EXPECT_LE(sp11_residual(a * b), 1e-10);
    EXPECT_LE(sp11_residual(a.inverse()), 1e-10);
    EXPECT_LE(max_norm_diff(a * a.inverse(), QMat2::identity()), 1e-12);
    EXPECT_LE(max_norm_diff(a.inverse() * a, QMat2::identity()), 1e-12);
  }
}

TEST(Sp11Test, SigmaIsAHomomorphism) {
  Sampler rng(2);
  for (int n = 0; n < 100; ++n) {
    const Sp11Element a = random_sp11(rng);
    const Sp11Element b = random_sp11(rng);
    EXPECT_LE(max_norm_diff(sigma(a * b), sigma(a) * sigma(b)), 1e-12);
    EXPECT_LE(max_norm_diff(sigma(a.matrix()), QMat2::i11() * a.matrix() * QMat2::i11()), 0.0);
  }
}

TEST(AlgebraTest, MembershipAndCartanSplit) {
  Sampler rng(3);
  const Sp11AlgebraElement x = random_algebra(rng);
  EXPECT_TRUE(algebra_check(x.matrix()).member);
  EXPECT_FALSE(algebra_check(QMat2::diag(1.0, 0.0)).member);
  EXPECT_THROW(Sp11AlgebraElement::from_matrix(QMat2{0.0, 1.0, 2.0, 0.0}), DomainError);
  const CartanSplit s = cartan_split(x);
  EXPECT_EQ(s.k.a, Quaternion());
  EXPECT_EQ(s.m.p, Quaternion());
  EXPECT_EQ(s.m.q, Quaternion());
  EXPECT_EQ((s.k + s.m).matrix(), x.matrix());
  // d(sigma) fixes k and negates m.
  EXPECT_EQ(sigma(s.k.matrix()), s.k.matrix());
  EXPECT_EQ(sigma(s.m.matrix()), -s.m.matrix());
}

TEST(AlgebraTest, BracketRespectsCartanGrading) {
  Sampler rng(4);
  for (int n = 0; n < 200; ++n) {
    const CartanSplit x = cartan_split(random_algebra(rng));
    const CartanSplit y = cartan_split(random_algebra(rng));
    EXPECT_LE(algebra_residual(commutator(x.k.matrix(), y.m.matrix())), 1e-12);
    const Sp11AlgebraElement kk = lie_bracket(x.k, y.k);
    const Sp11AlgebraElement km = lie_bracket(x.k, y.m);
    const Sp11AlgebraElement mm = lie_bracket(x.m, y.m);
    EXPECT_LE(kk.a.norm(), 1e-12);
    EXPECT_LE(std::max(km.p.norm(), km.q.norm()), 1e-12);
    EXPECT_LE(mm.a.norm(), 1e-12);
    EXPECT_LE(max_norm_diff(mm.matrix(), commutator(x.m.matrix(), y.m.matrix())), 1e-12);
  }
}

TEST(ExpTest, ClosedFormExamples) {
  EXPECT_EQ(exp_m(Quaternion()).matrix(), QMat2::identity());
  const Sp11Element h = exp_m(Quaternion(1.0));
  EXPECT_NEAR(h.matrix().m11.w, std::cosh(1.0), 1e-15);
  EXPECT_NEAR(h.matrix().m21.w, std::sinh(1.0), 1e-15);
  EXPECT_LE(max_norm_diff(exp_general(Sp11AlgebraElement()), QMat2::identity()), 0.0);
  const Quaternion q = 0.7 * Quaternion::j();
  EXPECT_LE(max_norm_diff(exp_general(Sp11AlgebraElement::m_part(q)), exp_m(q)), 1e-12);
}

TEST(ExpTest, DiagonalReducesToQuaternionExponential) {
  const Sp11AlgebraElement x =
      Sp11AlgebraElement::k_part(std::numbers::pi * Quaternion::i(), Quaternion());
  const Sp11Element e = exp_general(x);
  EXPECT_LE(max_norm_diff(e, QMat2::diag(-1.0, 1.0)), 1e-14);
  EXPECT_LE(sp11_residual(e), 1e-14);
  Sampler rng(5);
  for (int n = 0; n < 50; ++n) {
    const Quaternion p = rng.gaussian().im();
    const Quaternion r = rng.gaussian().im();
    EXPECT_LE(max_norm_diff(exp_general(Sp11AlgebraElement::k_part(p, r)),
                            QMat2::diag(exp(p), exp(r))),
              1e-13);
  }
}

TEST(ExpTest, SeriesMatchesClosedFormOnM) {
  Sampler rng(6);
  for (int n = 0; n < 200; ++n) {
    const Quaternion q = random_m(rng, 2.0);
    EXPECT_LE(max_norm_diff(exp_general(Sp11AlgebraElement::m_part(q)), exp_m(q)), 1e-12);
    EXPECT_LE(max_norm_diff(exp_m(q).inverse(), exp_m(-q)), 1e-13);
  }
}

TEST(PsiTest, Examples) {
  EXPECT_LE(max_abs_diff(psi_embed(QMat2::identity()), CMat4::identity()), 0.0);
  EXPECT_LE(max_abs_diff(psi_embed(QMat2::scalar(Quaternion::j())), j2_matrix()), 0.0);
  const CMat4 k = k11_matrix();
  EXPECT_LE(max_abs_diff(k, CMat4::diag(1.0, -1.0, 1.0, -1.0)), 0.0);
  EXPECT_LE(max_abs_diff(k * k, CMat4::identity()), 0.0);
}

TEST(PsiTest, IsARealAlgebraMonomorphism) {
  Sampler rng(7);
  for (int n = 0; n < 100; ++n) {
    const QMat2 a{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const QMat2 b{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    EXPECT_LE(max_abs_diff(psi_embed(a * b), psi_embed(a) * psi_embed(b)), 1e-12);
    EXPECT_LE(max_abs_diff(psi_embed(a + b), psi_embed(a) + psi_embed(b)), 1e-15);
    EXPECT_LE(max_abs_diff(psi_embed(a.adjoint()), psi_embed(a).adjoint()), 0.0);
  }
}

TEST(HatSp11Test, RhoOfPsiLandsInTheComplexForm) {
  EXPECT_TRUE(hat_sp11_check(rho(psi_embed(QMat2::identity()))).member);
  EXPECT_TRUE(hat_sp11_check(rho(psi_embed(exp_m(Quaternion(1.0))))).member);
  EXPECT_FALSE(hat_sp11_check(std::complex<double>(2.0) * CMat4::identity()).member);
  Sampler rng(8);
  for (int n = 0; n < 100; ++n) {
    EXPECT_LE(hat_sp11_residual(rho(psi_embed(random_sp11(rng)))), 1e-10);
  }
}

TEST(HatSp11Test, SeriesExponentialAgreesWithComplexOracle) {
  Sampler rng(9);
  for (int n = 0; n < 200; ++n) {
    const Sp11AlgebraElement x = random_algebra(rng, 0.8);
    const CMat4 series = psi_embed(exp_general(x));
    const CMat4 oracle = testing::complex_exp(psi_embed(x.matrix()));
    EXPECT_LE(max_abs_diff(series, oracle), 1e-10);
  }
}

TEST(CMat4Test, Inverse) {
  Sampler rng(10);
  const CMat4 m = psi_embed(random_sp11(rng));
  EXPECT_LE(max_abs_diff(m * m.inverse(), CMat4::identity()), 1e-12);
  EXPECT_THROW(CMat4().inverse(), DomainError);
}

}  // namespace
}  // namespace slicegeo
