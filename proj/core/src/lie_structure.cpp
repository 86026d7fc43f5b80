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

#include <algorithm>
#include <cmath>
#include <vector>

#include "slicegeo/errors.hpp"

namespace slicegeo {

namespace {

// artanh|p| sgn(p).
Quaternion ball_log(const BallPoint& p) {
  const double r = p.value().norm();
  if (r == 0.0) return {};
  return std::atanh(r) / r * p.value();
}

std::vector<QMat2> probes(Subgroup s) {
  const QMat2 di = QMat2::diag(Quaternion::i(), 1.0);
  const QMat2 dj = QMat2::diag(Quaternion::j(), 1.0);
  const QMat2 si = QMat2::scalar(Quaternion::i());
  const QMat2 sj = QMat2::scalar(Quaternion::j());
  switch (s) {
    case Subgroup::sp1x1:
      return {di, dj};
    case Subgroup::sp1I2:
      return {si, sj};
    case Subgroup::sp1xsp1:
      break;
  }
  return {di, dj, QMat2::diag(1.0, Quaternion::i()), QMat2::diag(1.0, Quaternion::j())};
}

}  // namespace

SymmFactorization symm_decompose(const Sp11Element& a) {
  const BallPoint origin_image = classical_apply(a, BallPoint());
  if (origin_image.value().norm() >= 1.0 - 1e-12) {
    throw BoundaryError("symm_decompose: 0 A too close to the boundary");
  }
  const Quaternion x = ball_log(origin_image);
  const QMat2 d = a.matrix() * exp_m(-x).matrix();
  const double off = std::max(d.m12.norm(), d.m21.norm());
  if (off > kDecompositionTol) {
    throw ConsistencyError("symm_decompose: A exp(-X) is not diagonal", off);
  }
  return {UnitQuaternion::normalize(d.m11, kDecompositionTol),
          UnitQuaternion::normalize(d.m22, kDecompositionTol), x};
}

Sp11Element symm_compose(const SymmFactorization& f) {
  return Sp11Element::trusted(QMat2::diag(f.u, f.v)) * exp_m(f.x);
}

SliceFactorization slice_decompose(const Sp11Element& a) {
  const QMat2& m = a.matrix();
  const Quaternion x = ball_log(quotient_point(a));
  const UnitQuaternion u = UnitQuaternion::normalize(m.m11 * m.m22.inverse(), kDecompositionTol);
  const QMat2 s = exp_m(-x).matrix() * QMat2::diag(u.conj(), 1.0) * m;
  const double off = std::max({s.m12.norm(), s.m21.norm(), (s.m11 - s.m22).norm()});
  if (off > kDecompositionTol) {
    throw ConsistencyError("slice_decompose: exp(-X) diag(conj(u), 1) A is not scalar", off);
  }
  return {u, x, UnitQuaternion::normalize(0.5 * (s.m11 + s.m22), kDecompositionTol)};
}

Sp11Element slice_compose(const SliceFactorization& f) {
  const Sp11Element left = Sp11Element::trusted(QMat2::diag(f.u, 1.0));
  return left * exp_m(f.x) * Sp11Element::trusted(QMat2::scalar(f.v));
}

BallPoint iso_g_act(const IsoGElement& e, const BallPoint& q) {
  const Quaternion p = e.eps2 == Sign::minus ? q.value().conj() : q.value();
  const double tau = std::tanh(e.t);
  const Quaternion& u = e.u.value();
  const Quaternion moved = (1.0 + tau * p).inverse() * (p + tau);
  return BallPoint(to_double(e.eps1) * u * moved * u.conj());
}

IsoGElement iso_g_mul(const IsoGElement& a, const IsoGElement& b) {
  return {a.u * b.u, a.eps1 * b.eps1, to_double(b.eps1) * a.t + b.t, a.eps2 * b.eps2};
}

IsoGElement iso_g_inverse(const IsoGElement& e) {
  return {e.u.conj(), e.eps1, -to_double(e.eps1) * e.t, e.eps2};
}

double centralizer_residual(const QMat2& a, Subgroup s) {
  double worst = 0.0;
  for (const QMat2& p : probes(s)) worst = std::max(worst, commutator(a, p).max_norm());
  return worst;
}

bool centralizer_check(const QMat2& a, Subgroup s, double tol) {
  return centralizer_residual(a, s) <= tol;
}

bool in_centralizer(const QMat2& a, Subgroup s, double tol) {
  switch (s) {
    case Subgroup::sp1x1:
      return a.m12.norm() <= tol && a.m21.norm() <= tol &&
             (max_abs_diff(a.m11, 1.0) <= tol || max_abs_diff(a.m11, -1.0) <= tol);
    case Subgroup::sp1I2:
      return a.m11.im_norm() <= tol && a.m12.im_norm() <= tol && a.m21.im_norm() <= tol &&
             a.m22.im_norm() <= tol;
    case Subgroup::sp1xsp1:
      break;
  }
  // diag(+-1, +-1). The two I11 signs lie in Sp(1) x Sp(1) itself and act
  // trivially on the quotient, so only +-I2 give distinct isometries.
  const auto unit_real = [tol](const Quaternion& q) {
    return max_abs_diff(q, 1.0) <= tol || max_abs_diff(q, -1.0) <= tol;
  };
  return a.m12.norm() <= tol && a.m21.norm() <= tol && unit_real(a.m11) && unit_real(a.m22);
}

double orbit_invariant(const BallPoint& q) {
  const SliceCoords s = slice_split(q.value());
  const double x = s.x;
  const double y0 = std::abs(s.y);
  if (y0 == 0.0) return 0.0;
  if (x == 0.0) return y0;
  // tau^2 x + tau b + x = 0 has roots with product 1; take the one in (-1, 1).
  const double b = 1.0 + x * x + y0 * y0;
  const double tau = -2.0 * x / (b + std::sqrt(b * b - 4.0 * x * x));
  const double re = 1.0 + tau * x;
  const double im = tau * y0;
  return y0 * (1.0 - tau * tau) / (re * re + im * im);
}

}  // namespace slicegeo
