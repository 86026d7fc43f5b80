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
#include <complex>
#include <iosfwd>

#include "slicegeo/quaternion.hpp"

namespace slicegeo {

// Residual thresholds for the membership predicates below.
inline constexpr double kGroupTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;

// 2x2 quaternionic matrix
//
//   ( m11  m12 )
//   ( m21  m22 )
//
// Column convention used throughout the library: (m11, m21) is the
// numerator column and (m12, m22) the denominator column of a Möbius
// transformation, q -> (q m12 + m22)^-1 (q m11 + m21).
struct QMat2 {
  Quaternion m11, m12, m21, m22;

  static constexpr QMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  // I_{1,1} = diag(1, -1).
  static constexpr QMat2 i11() { return {1.0, 0.0, 0.0, -1.0}; }
  static constexpr QMat2 diag(const Quaternion& p, const Quaternion& q) {
    return {p, 0.0, 0.0, q};
  }
  // v I_2.
  static constexpr QMat2 scalar(const Quaternion& v) { return diag(v, v); }

  // Conjugate transpose A*.
  constexpr QMat2 adjoint() const {
    return {m11.conj(), m21.conj(), m12.conj(), m22.conj()};
  }
  // Max over entries of the quaternion norm.
  double max_norm() const;
  bool is_finite() const {
    return m11.is_finite() && m12.is_finite() && m21.is_finite() && m22.is_finite();
  }

  friend constexpr bool operator==(const QMat2&, const QMat2&) = default;
};

constexpr QMat2 operator+(const QMat2& a, const QMat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
constexpr QMat2 operator-(const QMat2& a, const QMat2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
constexpr QMat2 operator-(const QMat2& a) { return {-a.m11, -a.m12, -a.m21, -a.m22}; }
constexpr QMat2 operator*(double s, const QMat2& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
constexpr QMat2 operator*(const QMat2& a, const QMat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// max over entries of |a_ij - b_ij|.
double max_norm_diff(const QMat2& a, const QMat2& b);

std::ostream& operator<<(std::ostream& os, const QMat2& a);

// ||A* I11 A - I11||_max.
double sp11_residual(const QMat2& a);

struct MembershipReport {
  bool member = false;
  double residual = 0.0;
};

MembershipReport sp11_check(const QMat2& a, double tol = kGroupTol);

// Element of Sp(1,1) = { A : A* I11 A = I11 }.
class Sp11Element {
 public:
  Sp11Element() = default;  // identity
  // Throws DomainError if sp11_residual(a) > tol.
  explicit Sp11Element(const QMat2& a, double tol = kGroupTol);

  // Skips the membership check. For products and closed forms that are in
  // the group by construction.
  static Sp11Element trusted(const QMat2& a);

  const QMat2& matrix() const { return m_; }
  operator const QMat2&() const { return m_; }  // NOLINT

  // I11 A* I11.
  Sp11Element inverse() const;

  friend Sp11Element operator*(const Sp11Element& a, const Sp11Element& b) {
    return trusted(a.m_ * b.m_);
  }

 private:
  QMat2 m_ = QMat2::identity();
};

Sp11Element sp11_inverse(const Sp11Element& a);

// sigma(A) = I11 A I11, i.e. (a c; b d) -> (a -c; -b d). The same formula is
// the differential d(sigma) on matrices of the Lie algebra.
QMat2 sigma(const QMat2& a);
inline Sp11Element sigma(const Sp11Element& a) { return Sp11Element::trusted(sigma(a.matrix())); }

// Element of sp(1,1):
//
//   X = ( p  conj(a) )
//       ( a     q    ),   p, q imaginary.
//
// The diagonal block lives in k_B = sp(1) x sp(1), the off-diagonal block in m_B.
struct Sp11AlgebraElement {
  Quaternion p;
  Quaternion q;
  Quaternion a;

  // Pure m_B element (0 conj(a); a 0).
  static constexpr Sp11AlgebraElement m_part(const Quaternion& a) { return {0.0, 0.0, a}; }
  // Pure k_B element diag(p, q).
  static constexpr Sp11AlgebraElement k_part(const Quaternion& p, const Quaternion& q) {
    return {p, q, 0.0};
  }

  constexpr QMat2 matrix() const { return {p, a.conj(), a, q}; }
  // Throws DomainError if algebra_residual(x) > tol.
  static Sp11AlgebraElement from_matrix(const QMat2& x, double tol = kAlgebraTol);

  friend constexpr Sp11AlgebraElement operator+(const Sp11AlgebraElement& x,
                                                const Sp11AlgebraElement& y) {
    return {x.p + y.p, x.q + y.q, x.a + y.a};
  }
  friend constexpr Sp11AlgebraElement operator*(double s, const Sp11AlgebraElement& x) {
    return {s * x.p, s * x.q, s * x.a};
  }
};

// max(||X* I11 + I11 X||_max, |Re X11|, |Re X22|).
double algebra_residual(const QMat2& x);
MembershipReport algebra_check(const QMat2& x, double tol = kAlgebraTol);

struct CartanSplit {
  Sp11AlgebraElement k;  // diagonal, imaginary
  Sp11AlgebraElement m;  // off-diagonal (0 conj(a); a 0)
};

CartanSplit cartan_split(const Sp11AlgebraElement& x);

// [X, Y] = XY - YX, projected back onto the algebra coordinates.
Sp11AlgebraElement lie_bracket(const Sp11AlgebraElement& x, const Sp11AlgebraElement& y);
QMat2 commutator(const QMat2& x, const QMat2& y);

// Closed-form exponential on m_B. The argument q stands for
// X = (0 conj(q); q 0); with t = |q| and u = sgn(q) the result is
// (cosh t, sinh t conj(u); sinh t u, cosh t).
Sp11Element exp_m(const Quaternion& q);

// Series exponential on a quaternionic 2x2 matrix by scaling and squaring:
// scale to ||X||_max <= 0.5, sum 16 Taylor terms, square back.
QMat2 exp_series(const QMat2& x);

// exp on sp(1,1) via exp_series.
Sp11Element exp_general(const Sp11AlgebraElement& x);

// Complex 4x4 matrix, row-major.
struct CMat4 {
  using Scalar = std::complex<double>;
  std::array<std::array<Scalar, 4>, 4> e{};

  static CMat4 identity();
  static CMat4 diag(Scalar a, Scalar b, Scalar c, Scalar d);

  Scalar& operator()(int r, int c) { return e[r][c]; }
  const Scalar& operator()(int r, int c) const { return e[r][c]; }

  CMat4 adjoint() const;
  CMat4 transpose() const;
  CMat4 conj() const;
  // Throws DomainError when singular.
  CMat4 inverse() const;
  double max_abs() const;

  friend CMat4 operator*(const CMat4& a, const CMat4& b);
  friend CMat4 operator+(const CMat4& a, const CMat4& b);
  friend CMat4 operator-(const CMat4& a, const CMat4& b);
  friend CMat4 operator*(Scalar s, const CMat4& a);
};

double max_abs_diff(const CMat4& a, const CMat4& b);

// psi(Z + W j) = ( Z  W ; -conj(W)  conj(Z) ) with Z, W complex 2x2, where a
// quaternion w + x i + y j + z k splits as (w + x i) + (y + z i) j.
CMat4 psi_embed(const QMat2& a);

// J2 = psi(I2 j), K11 = psi(I11), K1i = diag(1, i, 1, i).
CMat4 j2_matrix();
CMat4 k11_matrix();
CMat4 k1i_matrix();

// rho(M) = K1i M K1i^-1.
CMat4 rho(const CMat4& m);

// max(||M* K11 M - K11||, ||M^T J2 M - J2||).
double hat_sp11_residual(const CMat4& m);
MembershipReport hat_sp11_check(const CMat4& m, double tol = kGroupTol);

}  // namespace slicegeo
