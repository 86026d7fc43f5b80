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

#pragma once

#include <cmath>
#include <iosfwd>

namespace slicegeo {

// Absolute tolerance shared by the membership predicates of the strong
// quaternion types below.
inline constexpr double kMembershipTol = 1e-12;

// q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Real quaternions convert implicitly so that `q * 2.0 + 1.0` reads naturally.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(runtime/explicit)

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double re() const { return w; }
  constexpr Quaternion im() const { return {0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::hypot(std::hypot(w, x), std::hypot(y, z)); }
  double im_norm() const { return std::hypot(x, std::hypot(y, z)); }

  // Throws DomainError for q == 0.
  Quaternion inverse() const;

  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }
  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double norm(const Quaternion& q) { return q.norm(); }
inline Quaternion inverse(const Quaternion& q) { return q.inverse(); }

// Largest coordinate difference; the comparisons in tests use this.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

// q / |q|, with sgn(0) = 0.
Quaternion sgn(const Quaternion& q);

// Quaternionic exponential e^q = e^w (cos|v| + sin|v| v/|v|), v = Im q.
Quaternion exp(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Element of Sp(1): | |q| - 1 | <= kMembershipTol.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;  // 1
  // Throws DomainError unless | |q| - 1 | <= kMembershipTol.
  explicit UnitQuaternion(const Quaternion& q);
  // Rescales q onto the sphere; throws DomainError if | |q| - 1 | > tol.
  static UnitQuaternion normalize(const Quaternion& q, double tol);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT
  UnitQuaternion conj() const;
  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);
  friend UnitQuaternion operator-(const UnitQuaternion& a);

 private:
  struct Trusted {};
  UnitQuaternion(const Quaternion& q, Trusted) : q_(q) {}
  Quaternion q_{1.0};
};

// Element of the sphere S of imaginary units: Re = 0, |q| = 1, so q^2 = -1.
class ImaginaryUnit {
 public:
  ImaginaryUnit() = default;  // i
  // Throws DomainError unless |Re q| <= kMembershipTol and | |q| - 1 | <= kMembershipTol.
  explicit ImaginaryUnit(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT
  ImaginaryUnit operator-() const;

 private:
  Quaternion q_ = Quaternion::i();
};

// Point of the open unit ball with a numerical margin: |q| < 1 - kMembershipTol.
class BallPoint {
 public:
  BallPoint() = default;  // origin
  // Throws BoundaryError when |q| >= 1 - kMembershipTol, DomainError when q
  // is not finite.
  explicit BallPoint(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT

 private:
  Quaternion q_;
};

// q = x + y I with y >= 0. Real quaternions get I = i.
struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit;

  Quaternion compose() const { return Quaternion(x) + y * unit.value(); }
};

SliceCoords slice_split(const Quaternion& q);

}  // namespace slicegeo
