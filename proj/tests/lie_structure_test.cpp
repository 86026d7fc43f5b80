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

#include "slicegeo/lie_structure.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "slicegeo/cli/generators.hpp"
#include "slicegeo/errors.hpp"
#include "slicegeo/metrics.hpp"
#include "slicegeo/random.hpp"

namespace slicegeo {
namespace {

using cli::random_iso;
using cli::random_m;
using cli::random_sign;
using cli::random_sp11;

const Quaternion kI = Quaternion::i();
const Quaternion kJ = Quaternion::j();

QuaternionMap act(const IsoGElement& e) {
  return [e](const Quaternion& q) { return iso_g_act(e, BallPoint(q)).value(); };
}

TEST(SymmDecomposeTest, Examples) {
  const Quaternion q{0.2, -0.4, 0.1, 0.3};
  const SymmFactorization f = symm_decompose(exp_m(q));
  EXPECT_LE(max_abs_diff(f.u, 1.0), 1e-12);
  EXPECT_LE(max_abs_diff(f.v, 1.0), 1e-12);
  EXPECT_LE(max_abs_diff(f.x, q), 1e-12);

  const UnitQuaternion u(kI);
  const UnitQuaternion v(kJ);
  const SymmFactorization d = symm_decompose(Sp11Element::trusted(QMat2::diag(u, v)));
  EXPECT_EQ(d.u.value(), kI);
  EXPECT_EQ(d.v.value(), kJ);
  EXPECT_EQ(d.x, Quaternion());

  const Sp11Element a = Sp11Element::trusted(QMat2::diag(u, v)) * exp_m(0.3);
  const SymmFactorization g = symm_decompose(a);
  EXPECT_LE(max_abs_diff(g.u, kI), 1e-12);
  EXPECT_LE(max_abs_diff(g.v, kJ), 1e-12);
  EXPECT_LE(max_abs_diff(g.x, 0.3), 1e-12);
  EXPECT_EQ(g.algebra().matrix(), Sp11AlgebraElement::m_part(g.x).matrix());
}

TEST(SymmDecomposeTest, ComposeExamples) {
  EXPECT_EQ(symm_compose({}).matrix(), QMat2::identity());
  const UnitQuaternion u(kI);
  const UnitQuaternion v(kJ);
  EXPECT_EQ(symm_compose({u, v, 0.0}).matrix(), QMat2::diag(kI, kJ));
  EXPECT_LE(max_norm_diff(symm_compose({{}, {}, 0.8}), hyperbolic_rotation(0.8)), 1e-15);
}

TEST(SymmDecomposeTest, BoundaryError) {
  // tanh(20) rounds to 1.
  EXPECT_THROW(symm_decompose(exp_m(20.0)), BoundaryError);
}

TEST(SymmDecomposeTest, RoundTrips) {
  Sampler rng(81);
  for (int n = 0; n < 500; ++n) {
    const Sp11Element a = random_sp11(rng);
    EXPECT_LE(max_norm_diff(symm_compose(symm_decompose(a)), a), 1e-9);
    const SymmFactorization f{rng.sphere3(), rng.sphere3(), random_m(rng, 1.5)};
    const SymmFactorization g = symm_decompose(symm_compose(f));
    EXPECT_LE(max_abs_diff(f.u, g.u), 1e-9);
    EXPECT_LE(max_abs_diff(f.v, g.v), 1e-9);
    EXPECT_LE(max_abs_diff(f.x, g.x), 1e-9);
  }
}

TEST(SliceDecomposeTest, Examples) {
  const Quaternion q{0.2, -0.4, 0.1, 0.3};
  const SliceFactorization f = slice_decompose(exp_m(q));
  EXPECT_LE(max_abs_diff(f.u, 1.0), 1e-12);
  EXPECT_LE(max_abs_diff(f.v, 1.0), 1e-12);
  EXPECT_LE(max_abs_diff(f.x, q), 1e-12);

  const UnitQuaternion v(Quaternion{0.0, 0.6, 0.8, 0.0});
  const SliceFactorization s = slice_decompose(Sp11Element::trusted(QMat2::scalar(v)));
  EXPECT_LE(max_abs_diff(s.u, 1.0), 1e-15);
  EXPECT_LE(s.x.norm(), 1e-15);
  EXPECT_LE(max_abs_diff(s.v, v), 1e-15);
}

TEST(SliceDecomposeTest, ComposeExamples) {
  EXPECT_EQ(slice_compose({}).matrix(), QMat2::identity());
  const UnitQuaternion u(kJ);
  EXPECT_LE(max_norm_diff(slice_compose({u, 0.0, {}}), QMat2::diag(kJ, 1.0)), 0.0);
  const Sp11Element a = slice_compose({{}, 0.3 * kI, UnitQuaternion(kJ)});
  EXPECT_LE(max_norm_diff(a, exp_m(0.3 * kI) * Sp11Element::trusted(QMat2::scalar(kJ))), 1e-15);
}

TEST(SliceDecomposeTest, RoundTrips) {
  Sampler rng(82);
  for (int n = 0; n < 500; ++n) {
    const Sp11Element a = random_sp11(rng);
    EXPECT_LE(max_norm_diff(slice_compose(slice_decompose(a)), a), 1e-9);
    const SliceFactorization f{rng.sphere3(), random_m(rng, 1.5), rng.sphere3()};
    const SliceFactorization g = slice_decompose(slice_compose(f));
    EXPECT_LE(max_abs_diff(f.u, g.u), 1e-9);
    EXPECT_LE(max_abs_diff(f.v, g.v), 1e-9);
    EXPECT_LE(max_abs_diff(f.x, g.x), 1e-9);
  }
}

TEST(SliceDecomposeTest, OffScalarRemainderIsAConsistencyError) {
  QMat2 m = hyperbolic_rotation(1.0).matrix();
  m.m21 += 1e-6 * kJ;
  try {
    slice_decompose(Sp11Element::trusted(m));
    FAIL() << "expected ConsistencyError";
  } catch (const ConsistencyError& e) {
    EXPECT_GT(e.residual(), 1e-9);
  }
}

TEST(DecompositionTest, BothQuotientsAgreeOnExponentials) {
  Sampler rng(83);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = random_m(rng, 2.0);
    const Quaternion expected = std::tanh(q.norm()) * sgn(q);
    EXPECT_LE(max_abs_diff(classical_apply(exp_m(q), BallPoint()), expected), 1e-12);
    EXPECT_LE(max_abs_diff(quotient_point(exp_m(q)), expected), 1e-12);
  }
}

TEST(IsoGTest, ActionExamples) {
  Sampler rng(84);
  const BallPoint q = rng.ball(0.8);
  EXPECT_LE(max_abs_diff(iso_g_act(IsoGElement::identity(), q), q), 0.0);
  const UnitQuaternion u = rng.sphere3();
  IsoGElement e;
  e.u = u;
  EXPECT_LE(max_abs_diff(iso_g_act(e, q), u.value() * q.value() * u.value().conj()), 1e-15);
  IsoGElement h;
  h.t = 0.9;
  EXPECT_NEAR(iso_g_act(h, BallPoint()).value().w, std::tanh(0.9), 1e-16);
  IsoGElement c;
  c.eps2 = Sign::minus;
  EXPECT_EQ(iso_g_act(c, q).value(), q.value().conj());
  IsoGElement s;
  s.eps1 = Sign::minus;
  EXPECT_EQ(iso_g_act(s, q).value(), -q.value());
}

TEST(IsoGTest, StarLawExamples) {
  IsoGElement a;
  a.eps1 = Sign::minus;
  a.t = 1.0;
  IsoGElement b;
  b.eps1 = Sign::minus;
  b.t = 2.0;
  const IsoGElement ab = a * b;
  EXPECT_EQ(ab.eps1, Sign::plus);
  EXPECT_EQ(ab.t, 1.0);

  Sampler rng(85);
  for (int n = 0; n < 50; ++n) {
    const IsoGElement e = random_iso(rng);
    for (const IsoGElement& p : {e * IsoGElement::identity(), IsoGElement::identity() * e}) {
      EXPECT_EQ(p.eps1, e.eps1);
      EXPECT_EQ(p.eps2, e.eps2);
      EXPECT_EQ(p.t, e.t);
      EXPECT_LE(max_abs_diff(p.u, e.u), 4e-16);
    }
    const IsoGElement inv = iso_g_inverse(e);
    const IsoGElement one = e * inv;
    EXPECT_EQ(one.eps1, Sign::plus);
    EXPECT_EQ(one.eps2, Sign::plus);
    EXPECT_EQ(one.t, 0.0);
    EXPECT_LE(max_abs_diff(one.u, 1.0), 1e-15);
  }
}

TEST(IsoGTest, MultiplicationComposesAsALeftAction) {
  Sampler rng(86);
  for (int n = 0; n < 200; ++n) {
    const IsoGElement a = random_iso(rng);
    const IsoGElement b = random_iso(rng);
    const BallPoint q = rng.ball(0.7);
    EXPECT_LE(max_abs_diff(iso_g_act(a * b, q), iso_g_act(a, iso_g_act(b, q))), 1e-12);
  }
}

TEST(IsoGTest, PreservesSliceMetricOnBothBranches) {
  Sampler rng(87);
  for (int n = 0; n < 200; ++n) {
    IsoGElement e = random_iso(rng);
    e.eps2 = n % 2 == 0 ? Sign::plus : Sign::minus;
    EXPECT_LE(pullback_residual(act(e), MetricKind::g, rng.ball(0.6), 4, rng.fork_seed()), 1e-5);
  }
}

TEST(IsoGTest, OrientationFollowsLastSign) {
  Sampler rng(88);
  for (int n = 0; n < 100; ++n) {
    const IsoGElement e = random_iso(rng);
    const Jacobian j = differential(act(e), rng.ball(0.6));
    if (e.eps2 == Sign::plus) EXPECT_GT(j.determinant(), 0.0);
    else EXPECT_LT(j.determinant(), 0.0);
  }
}

TEST(IsoGTest, SignOfUnitActsTrivially) {
  Sampler rng(89);
  for (int n = 0; n < 100; ++n) {
    IsoGElement e = random_iso(rng);
    const BallPoint q = rng.ball(0.9);
    const Quaternion before = iso_g_act(e, q);
    e.u = -e.u;
    EXPECT_LE(max_abs_diff(before, iso_g_act(e, q)), 1e-14);
  }
}

TEST(IsoGTest, OrientationPreservingPartComesFromTranslations) {
  Sampler rng(90);
  for (int n = 0; n < 200; ++n) {
    const Sp11Element a = random_sp11(rng);
    IsoGElement e = random_iso(rng);
    e.eps2 = Sign::plus;
    const Sp11Element left = Sp11Element::trusted(QMat2::diag(to_double(random_sign(rng)), e.u));
    const Sp11Element moved = left * a * hyperbolic_rotation(e.t) * sign_flip(e.eps1);
    EXPECT_LE(max_abs_diff(quotient_point(moved), iso_g_act(e, quotient_point(a))), 1e-9);
  }
}

TEST(CentralizerTest, Examples) {
  const UnitQuaternion u(Quaternion{0.0, 0.0, 0.6, 0.8});
  EXPECT_TRUE(centralizer_check(QMat2::diag(-1.0, u), Subgroup::sp1x1));
  EXPECT_TRUE(centralizer_check(hyperbolic_rotation(1.3), Subgroup::sp1I2));
  EXPECT_FALSE(centralizer_check(QMat2::diag(kI, 1.0), Subgroup::sp1x1));
  EXPECT_TRUE(centralizer_check(-QMat2::identity(), Subgroup::sp1xsp1));
  // I11 commutes with every diag(u, v) but acts trivially on the quotient.
  EXPECT_TRUE(centralizer_check(QMat2::i11(), Subgroup::sp1xsp1));
  EXPECT_TRUE(in_centralizer(-QMat2::i11(), Subgroup::sp1xsp1));
  EXPECT_FALSE(centralizer_check(QMat2::diag(1.0, kI), Subgroup::sp1xsp1));
  EXPECT_TRUE(centralizer_check(QMat2::i11(), Subgroup::sp1I2));
}

TEST(CentralizerTest, ProbesAgreeWithClosedForms) {
  Sampler rng(91);
  for (int n = 0; n < 100; ++n) {
    const double e = to_double(random_sign(rng));
    const QMat2 members[] = {QMat2::diag(e, rng.sphere3()),
                             o11_compose({random_sign(rng), rng.sign() > 0, rng.uniform(-2, 2)}),
                             QMat2::diag(e, to_double(random_sign(rng)))};
    const Subgroup groups[] = {Subgroup::sp1x1, Subgroup::sp1I2, Subgroup::sp1xsp1};
    for (int k = 0; k < 3; ++k) {
      EXPECT_TRUE(centralizer_check(members[k], groups[k]));
      EXPECT_TRUE(in_centralizer(members[k], groups[k]));
    }
    const Sp11Element outside = random_sp11(rng);
    for (const Subgroup s : groups) {
      EXPECT_FALSE(centralizer_check(outside, s));
      EXPECT_FALSE(in_centralizer(outside, s));
    }
    const QMat2 block = QMat2::diag(exp(rng.uniform(0.1, 1.5) * rng.imaginary_unit().value()),
                                    rng.sphere3());
    EXPECT_FALSE(centralizer_check(block, Subgroup::sp1x1));
    EXPECT_FALSE(in_centralizer(block, Subgroup::sp1x1));
  }
}

TEST(OrbitInvariantTest, Examples) {
  EXPECT_EQ(orbit_invariant(BallPoint(0.7)), 0.0);
  EXPECT_EQ(orbit_invariant(BallPoint(-0.2)), 0.0);
  EXPECT_EQ(orbit_invariant(BallPoint(0.3 * kI)), 0.3);
  Sampler rng(92);
  for (int n = 0; n < 100; ++n) {
    IsoGElement e = random_iso(rng, 3.0);
    e.eps1 = Sign::plus;
    e.eps2 = Sign::plus;
    EXPECT_NEAR(orbit_invariant(iso_g_act(e, BallPoint(0.3 * kJ))), 0.3, 1e-12);
  }
}

TEST(OrbitInvariantTest, ConstantAlongOrbitsAndMatchesGridSearch) {
  Sampler rng(93);
  for (int base = 0; base < 10; ++base) {
    const double y = rng.uniform(0.0, 0.8);
    const BallPoint p(y * rng.imaginary_unit().value());
    for (int n = 0; n < 100; ++n) {
      const BallPoint q = iso_g_act(random_iso(rng, 3.0), p);
      EXPECT_NEAR(orbit_invariant(q), y, 1e-9);
      if (n % 10 == 0) EXPECT_NEAR(orbit_invariant(q), testing::grid_orbit_invariant(q), 1e-6);
    }
  }
}

}  // namespace
}  // namespace slicegeo
