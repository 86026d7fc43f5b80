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

#include <array>

#include "slicegeo/hmat.hpp"
#include "slicegeo/quaternion.hpp"
#include "slicegeo/star_poly.hpp"

namespace slicegeo {

enum class Sign : int { plus = 1, minus = -1 };

constexpr double to_double(Sign s) { return static_cast<double>(static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

enum class MobiusKind { classical, regular };

// F_A(q) = (q m12 + m22)^-1 (q m11 + m21). A right action:
// F_{AB} = F_B o F_A.
BallPoint classical_apply(const Sp11Element& a, const BallPoint& q);

// The regular counterpart, l_den^{-*} * l_num with l_num(q) = q m11 + m21
// and l_den(q) = q m12 + m22, evaluated as
//   l_den^s(q)^-1 (l_den^c * l_num)(q).
// Throws InternalError if l_den^s vanishes at q, which cannot happen for a
// group element and a point of the ball.
BallPoint regular_apply(const Sp11Element& a, const BallPoint& q);

class MobiusMap {
 public:
  MobiusMap(Sp11Element a, MobiusKind kind) : a_(a), kind_(kind) {}

  const Sp11Element& matrix() const { return a_; }
  MobiusKind kind() const { return kind_; }

  BallPoint operator()(const BallPoint& q) const {
    return kind_ == MobiusKind::classical ? classical_apply(a_, q) : regular_apply(a_, q);
  }
  // Unchecked form for finite differences and composition with other maps.
  Quaternion operator()(const Quaternion& q) const { return (*this)(BallPoint(q)).value(); }

 private:
  Sp11Element a_;
  MobiusKind kind_;
};

// M(a) = (1, -conj(a); -a, 1) / sqrt(1 - |a|^2). M(a)^-1 = M(-a), and
// regular_apply(M(a), a) = 0.
Sp11Element mobius_M(const BallPoint& a);

// H(t) = (cosh t, sinh t; sinh t, cosh t).
Sp11Element hyperbolic_rotation(double t);

// I(eps) = diag(1, eps).
Sp11Element sign_flip(Sign eps);

// F_{a,u}(q) = (1 - q a)^-1 (q - a) u for real a in (-1, 1). Classical and
// regular at the same time.
BallPoint f_au(double a, const UnitQuaternion& u, const BallPoint& q);

// The matrix whose classical and regular transformations are F_{a,u}:
// (u, -a; -a u, 1) / sqrt(1 - a^2).
Sp11Element f_au_matrix(double a, const UnitQuaternion& u);

// Phi(A): the unique p in the ball with regular_apply(A^-1, p) = 0.
// Throws InternalError if the numerator of the regular transformation of
// A^-1 does not have exactly one zero inside the ball.
BallPoint quotient_point(const Sp11Element& a);

// Central-difference Jacobian of a map R^4 -> R^4 in coordinates (w,x,y,z).
struct Jacobian {
  std::array<std::array<double, 4>, 4> e{};

  double operator()(int r, int c) const { return e[r][c]; }
  Quaternion apply(const Quaternion& v) const;
  double determinant() const;
  // +1 orientation preserving, -1 reversing, 0 degenerate.
  int orientation() const;
};

// Throws DomainError when h underflows at q.
Jacobian differential(const QuaternionMap& f, const Quaternion& q, double h = 1e-5);

// A real element of Sp(1,1), i.e. of O(1,1), written as eps H(t) r with
// r = I2 or I11.
struct O11Class {
  Sign eps = Sign::plus;
  bool flip = false;  // r = I11
  double t = 0.0;
};

// Throws DomainError when an entry has an imaginary part above
// kMembershipTol.
O11Class o11_classify(const Sp11Element& a);

Sp11Element o11_compose(const O11Class& c);

}  // namespace slicegeo
