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

#include <algorithm>
#include <ostream>

#include "slicegeo/errors.hpp"

namespace slicegeo {

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
  return conj() / n2;
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x),
                   std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

Quaternion sgn(const Quaternion& q) {
  const double n = q.norm();
  if (n == 0.0) return {};
  return q / n;
}

Quaternion exp(const Quaternion& q) {
  const double v = q.im_norm();
  const double ew = std::exp(q.w);
  if (v == 0.0) return Quaternion(ew);
  const double s = ew * std::sin(v) / v;
  return {ew * std::cos(v), s * q.x, s * q.y, s * q.z};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

UnitQuaternion::UnitQuaternion(const Quaternion& q) : q_(q) {
  if (!q.is_finite() || std::abs(q.norm() - 1.0) > kMembershipTol) {
    throw DomainError("quaternion is not a unit quaternion");
  }
}

UnitQuaternion UnitQuaternion::normalize(const Quaternion& q, double tol) {
  const double n = q.norm();
  if (!q.is_finite() || std::abs(n - 1.0) > tol) {
    throw DomainError("quaternion too far from the unit sphere to normalize");
  }
  return UnitQuaternion(q / n, Trusted{});
}

UnitQuaternion UnitQuaternion::conj() const {
  return UnitQuaternion(q_.conj(), Trusted{});
}

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  const Quaternion p = a.q_ * b.q_;
  return UnitQuaternion(p / p.norm(), UnitQuaternion::Trusted{});
}

UnitQuaternion operator-(const UnitQuaternion& a) {
  return UnitQuaternion(-a.q_, UnitQuaternion::Trusted{});
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& q) : q_(q) {
  if (!q.is_finite() || std::abs(q.w) > kMembershipTol ||
      std::abs(q.norm() - 1.0) > kMembershipTol) {
    throw DomainError("quaternion is not an imaginary unit");
  }
}

ImaginaryUnit ImaginaryUnit::operator-() const {
  ImaginaryUnit r;
  r.q_ = -q_;
  return r;
}

BallPoint::BallPoint(const Quaternion& q) : q_(q) {
  if (!q.is_finite()) throw DomainError("ball point is not finite");
  if (q.norm() >= 1.0 - kMembershipTol) {
    throw BoundaryError("point is not inside the unit ball");
  }
}

SliceCoords slice_split(const Quaternion& q) {
  const double y = q.im_norm();
  if (y == 0.0) return {q.w, 0.0, ImaginaryUnit()};
  const Quaternion unit{0.0, q.x / y, q.y / y, q.z / y};
  // |unit| is 1 to a few ulps, well inside kMembershipTol.
  return {q.w, y, ImaginaryUnit(unit)};
}

}  // namespace slicegeo
