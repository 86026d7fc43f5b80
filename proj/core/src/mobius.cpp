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

#include "slicegeo/mobius.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "finite_difference.hpp"
#include "slicegeo/errors.hpp"

namespace slicegeo {

namespace {

StarPoly numerator(const QMat2& a) { return StarPoly::linear(a.m11, a.m21); }
StarPoly denominator(const QMat2& a) { return StarPoly::linear(a.m12, a.m22); }

}  // namespace

BallPoint classical_apply(const Sp11Element& a, const BallPoint& q) {
  const QMat2& m = a.matrix();
  const Quaternion& p = q.value();
  return BallPoint((p * m.m12 + m.m22).inverse() * (p * m.m11 + m.m21));
}

BallPoint regular_apply(const Sp11Element& a, const BallPoint& q) {
  const QMat2& m = a.matrix();
  const StarPoly den = denominator(m);
  const Quaternion& p = q.value();
  // l_den^s(q) = q^2 |m12|^2 + 2 q Re(m12 conj(m22)) + |m22|^2, real on the
  // real axis and |m22|^2 - |m12|^2 = 1 for a group element.
  const Quaternion s = eval(symmetrize(den), p);
  if (s.norm() <= 1e-14 * std::max(1.0, m.m22.norm2())) {
    throw InternalError("regular_apply: denominator symmetrization vanishes in the ball");
  }
  return BallPoint(s.inverse() * eval(reg_conj(den) * numerator(m), p));
}

Sp11Element mobius_M(const BallPoint& a) {
  const Quaternion& p = a.value();
  const double c = 1.0 / std::sqrt(1.0 - p.norm2());
  return Sp11Element::trusted(c * QMat2{1.0, -p.conj(), -p, 1.0});
}

Sp11Element hyperbolic_rotation(double t) {
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  return Sp11Element::trusted({ch, sh, sh, ch});
}

Sp11Element sign_flip(Sign eps) { return Sp11Element::trusted(QMat2::diag(1.0, to_double(eps))); }

BallPoint f_au(double a, const UnitQuaternion& u, const BallPoint& q) {
  if (!(std::abs(a) < 1.0)) throw DomainError("f_au: a must lie in (-1, 1)");
  const Quaternion& p = q.value();
  return BallPoint((1.0 - p * a).inverse() * (p - a) * u.value());
}

Sp11Element f_au_matrix(double a, const UnitQuaternion& u) {
  if (!(std::abs(a) < 1.0)) throw DomainError("f_au_matrix: a must lie in (-1, 1)");
  const double c = 1.0 / std::sqrt(1.0 - a * a);
  const Quaternion& v = u.value();
  return Sp11Element::trusted(c * QMat2{v, -a, -a * v, 1.0});
}

BallPoint quotient_point(const Sp11Element& a) {
  const QMat2 b = a.inverse().matrix();
  const StarPoly left = reg_conj(denominator(b));
  const StarPoly right = numerator(b);
  RootReport rep;
  try {
    rep = left.degree() == 1 && right.degree() == 1 ? quadratic_root_in_ball(left, right)
                                                    : quadratic_root_in_ball(left * right);
  } catch (const DomainError& e) {
    // Degenerate numerator: the matrix is not in the group.
    throw InternalError(std::string("quotient_point: ") + e.what());
  }
  const std::vector<Quaternion> zeros = rep.interior_points();
  if (zeros.size() != 1 || !rep.spheres.empty()) {
    throw InternalError("quotient_point: expected exactly one zero inside the ball");
  }
  return BallPoint(zeros.front());
}

Quaternion Jacobian::apply(const Quaternion& v) const {
  const std::array<double, 4> in{v.w, v.x, v.y, v.z};
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += e[r][c] * in[c];
  return {out[0], out[1], out[2], out[3]};
}

double Jacobian::determinant() const {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = e[r][c];
  return m.determinant();
}

int Jacobian::orientation() const {
  const double d = determinant();
  return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
}

Jacobian differential(const QuaternionMap& f, const Quaternion& q, double h) {
  detail::check_step(h, q);
  const std::array<Quaternion, 4> basis{Quaternion(1.0), Quaternion::i(), Quaternion::j(),
                                        Quaternion::k()};
  Jacobian jac;
  for (int c = 0; c < 4; ++c) {
    const Quaternion col = (f(q + h * basis[c]) - f(q - h * basis[c])) / (2.0 * h);
    jac.e[0][c] = col.w;
    jac.e[1][c] = col.x;
    jac.e[2][c] = col.y;
    jac.e[3][c] = col.z;
  }
  return jac;
}

O11Class o11_classify(const Sp11Element& a) {
  const QMat2& m = a.matrix();
  for (const Quaternion* e : {&m.m11, &m.m12, &m.m21, &m.m22}) {
    if (e->im_norm() > kMembershipTol) throw DomainError("o11_classify: non-real entry");
  }
  // eps H(t) r has m11 = eps cosh t, m21 = eps sinh t, m22 = +-eps cosh t.
  O11Class c;
  c.eps = m.m11.w < 0.0 ? Sign::minus : Sign::plus;
  c.flip = m.m11.w * m.m22.w < 0.0;
  c.t = std::asinh(to_double(c.eps) * m.m21.w);
  return c;
}

Sp11Element o11_compose(const O11Class& c) {
  Sp11Element h = hyperbolic_rotation(c.t);
  if (c.flip) h = h * sign_flip(Sign::minus);
  return Sp11Element::trusted(to_double(c.eps) * h.matrix());
}

}  // namespace slicegeo
