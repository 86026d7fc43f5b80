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

#include <functional>
#include <optional>
#include <vector>

#include "slicegeo/quaternion.hpp"

namespace slicegeo {

using QuaternionMap = std::function<Quaternion(const Quaternion&)>;

// Slice-regular polynomial f(q) = sum_n q^n a_n, coefficients on the right.
// coeffs()[n] is a_n. Trailing zero coefficients are dropped on
// construction, so the last stored coefficient is non-zero unless the
// polynomial is zero.
class StarPoly {
 public:
  StarPoly() = default;
  explicit StarPoly(std::vector<Quaternion> coeffs);

  static StarPoly constant(const Quaternion& c) { return StarPoly({c}); }
  // l_{a,b}(q) = q a + b.
  static StarPoly linear(const Quaternion& a, const Quaternion& b) { return StarPoly({b, a}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  Quaternion coeff(int n) const;

  Quaternion operator()(const Quaternion& q) const;

  friend bool operator==(const StarPoly&, const StarPoly&) = default;

 private:
  std::vector<Quaternion> coeffs_;
};

// (f * g) has coefficients c_n = sum_k a_k b_{n-k}.
StarPoly star_mul(const StarPoly& f, const StarPoly& g);
inline StarPoly operator*(const StarPoly& f, const StarPoly& g) { return star_mul(f, g); }

// f^c: conjugated coefficients.
StarPoly reg_conj(const StarPoly& f);

// f^s = f * f^c. Real coefficients up to rounding.
StarPoly symmetrize(const StarPoly& f);

// Pointwise value, Horner form with q multiplying from the left.
Quaternion eval(const StarPoly& f, const Quaternion& q);

// Pointwise value of f^{-*} = (f^s)^{-1} f^c at q. Throws PoleError when
// f^s(q) vanishes to within rounding of its coefficients.
Quaternion star_inverse_eval(const StarPoly& f, const Quaternion& q);

enum class ZeroLocation { interior, boundary, exterior };

struct IsolatedZero {
  Quaternion point;
  ZeroLocation where = ZeroLocation::interior;
};

// Every point of x + y S is a zero.
struct SphericalZero {
  double x = 0.0;
  double y = 0.0;
  ZeroLocation where = ZeroLocation::interior;
};

// Zeros of a degree-1 or degree-2 StarPoly that lie in the closed unit
// ball. Boundary means | |q| - 1 | <= 1e-10.
struct RootReport {
  std::vector<IsolatedZero> points;
  std::vector<SphericalZero> spheres;

  bool none_in_ball() const { return points.empty() && spheres.empty(); }
  // Isolated zeros strictly inside the ball.
  std::vector<Quaternion> interior_points() const;
};

// Zeros of P(q) = q^2 a2 + q a1 + a0 (or q a1 + a0) in the closed ball.
//
// The real polynomial P^s is solved first; each root class x +- y i fixes a
// sphere x + y S, on which P(x + y I) = C + I D with
//   C = (x^2 - y^2) a2 + x a1 + a0,   D = 2 x y a2 + y a1.
// If D != 0 the only zero on the sphere is I = -C D^-1 (accepted when
// |I^2 + 1| <= 1e-8); if C = D = 0 the whole sphere vanishes. Accepted zeros
// are polished by Newton's method on P itself.
//
// Throws DomainError for the zero polynomial, constants and degree > 2.
RootReport quadratic_root_in_ball(const StarPoly& p);

// Same for P = left * right with both factors of degree 1. Here P^s is the
// product left^s right^s, whose roots are available in closed form, which
// keeps nearby spheres (zeros close to the unit sphere) well separated.
RootReport quadratic_root_in_ball(const StarPoly& left, const StarPoly& right);

// |1/2 (d/dx + I d/dy) f(x + y I)| at q by central differences of step h
// along the slice coordinates of q. The slice defaults to the one through q
// (I = i for real q). Throws DomainError if h is not a usable step at q.
double regularity_residual(const QuaternionMap& f, const Quaternion& q, double h = 1e-5,
                           std::optional<ImaginaryUnit> slice = std::nullopt);

}  // namespace slicegeo
