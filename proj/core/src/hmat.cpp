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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

#include "slicegeo/errors.hpp"

namespace slicegeo {

double QMat2::max_norm() const {
  return std::max({m11.norm(), m12.norm(), m21.norm(), m22.norm()});
}

double max_norm_diff(const QMat2& a, const QMat2& b) { return (a - b).max_norm(); }

std::ostream& operator<<(std::ostream& os, const QMat2& a) {
  return os << '[' << '[' << a.m11 << ", " << a.m12 << "], [" << a.m21 << ", "
            << a.m22 << ']' << ']';
}

double sp11_residual(const QMat2& a) {
  return max_norm_diff(a.adjoint() * QMat2::i11() * a, QMat2::i11());
}

MembershipReport sp11_check(const QMat2& a, double tol) {
  if (!a.is_finite()) return {false, INFINITY};
  const double r = sp11_residual(a);
  return {r <= tol, r};
}

Sp11Element::Sp11Element(const QMat2& a, double tol) : m_(a) {
  const MembershipReport rep = sp11_check(a, tol);
  if (!rep.member) throw DomainError("matrix is not in Sp(1,1)");
}

Sp11Element Sp11Element::trusted(const QMat2& a) {
  Sp11Element e;
  e.m_ = a;
  return e;
}

Sp11Element Sp11Element::inverse() const {
  return trusted(QMat2::i11() * m_.adjoint() * QMat2::i11());
}

Sp11Element sp11_inverse(const Sp11Element& a) { return a.inverse(); }

QMat2 sigma(const QMat2& a) { return {a.m11, -a.m12, -a.m21, a.m22}; }

double algebra_residual(const QMat2& x) {
  const QMat2 s = x.adjoint() * QMat2::i11() + QMat2::i11() * x;
  return std::max({s.max_norm(), std::abs(x.m11.w), std::abs(x.m22.w)});
}

MembershipReport algebra_check(const QMat2& x, double tol) {
  if (!x.is_finite()) return {false, INFINITY};
  const double r = algebra_residual(x);
  return {r <= tol, r};
}

Sp11AlgebraElement Sp11AlgebraElement::from_matrix(const QMat2& x, double tol) {
  if (!algebra_check(x, tol).member) throw DomainError("matrix is not in sp(1,1)");
  return {x.m11.im(), x.m22.im(), x.m21};
}

CartanSplit cartan_split(const Sp11AlgebraElement& x) {
  return {Sp11AlgebraElement::k_part(x.p, x.q), Sp11AlgebraElement::m_part(x.a)};
}

QMat2 commutator(const QMat2& x, const QMat2& y) { return x * y - y * x; }

Sp11AlgebraElement lie_bracket(const Sp11AlgebraElement& x, const Sp11AlgebraElement& y) {
  const QMat2 c = commutator(x.matrix(), y.matrix());
  // The commutator of two algebra elements is in the algebra exactly; reading
  // the coordinates off (p, q imaginary parts, a from the lower-left entry)
  // discards only rounding noise.
  return {c.m11.im(), c.m22.im(), c.m21};
}

Sp11Element exp_m(const Quaternion& q) {
  const double t = q.norm();
  const Quaternion u = sgn(q);
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  return Sp11Element::trusted({ch, sh * u.conj(), sh * u, ch});
}

QMat2 exp_series(const QMat2& x) {
  constexpr int kTerms = 16;
  const double n = x.max_norm();
  int squarings = 0;
  if (n > 0.5) squarings = static_cast<int>(std::ceil(std::log2(n / 0.5)));
  const QMat2 scaled = std::ldexp(1.0, -squarings) * x;

  QMat2 sum = QMat2::identity();
  QMat2 term = QMat2::identity();
  for (int k = 1; k <= kTerms; ++k) {
    term = (1.0 / k) * (term * scaled);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Sp11Element exp_general(const Sp11AlgebraElement& x) {
  return Sp11Element::trusted(exp_series(x.matrix()));
}

// ---- complex 4x4 ----------------------------------------------------------

CMat4 CMat4::identity() { return diag(1.0, 1.0, 1.0, 1.0); }

CMat4 CMat4::diag(Scalar a, Scalar b, Scalar c, Scalar d) {
  CMat4 m;
  m.e[0][0] = a;
  m.e[1][1] = b;
  m.e[2][2] = c;
  m.e[3][3] = d;
  return m;
}

CMat4 CMat4::adjoint() const { return transpose().conj(); }

CMat4 CMat4::transpose() const {
  CMat4 t;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t.e[c][r] = e[r][c];
  return t;
}

CMat4 CMat4::conj() const {
  CMat4 t;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t.e[r][c] = std::conj(e[r][c]);
  return t;
}

CMat4 CMat4::inverse() const {
  // Gauss-Jordan with partial pivoting.
  CMat4 a = *this;
  CMat4 inv = identity();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a.e[r][col]) > std::abs(a.e[piv][col])) piv = r;
    if (std::abs(a.e[piv][col]) == 0.0) throw DomainError("singular 4x4 matrix");
    std::swap(a.e[piv], a.e[col]);
    std::swap(inv.e[piv], inv.e[col]);
    const Scalar d = a.e[col][col];
    for (int c = 0; c < 4; ++c) {
      a.e[col][c] /= d;
      inv.e[col][c] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Scalar f = a.e[r][col];
      if (f == Scalar{}) continue;
      for (int c = 0; c < 4; ++c) {
        a.e[r][c] -= f * a.e[col][c];
        inv.e[r][c] -= f * inv.e[col][c];
      }
    }
  }
  return inv;
}

double CMat4::max_abs() const {
  double m = 0.0;
  for (const auto& row : e)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
  CMat4 p;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CMat4::Scalar s{};
      for (int k = 0; k < 4; ++k) s += a.e[r][k] * b.e[k][c];
      p.e[r][c] = s;
    }
  return p;
}

CMat4 operator+(const CMat4& a, const CMat4& b) {
  CMat4 s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.e[r][c] = a.e[r][c] + b.e[r][c];
  return s;
}

CMat4 operator-(const CMat4& a, const CMat4& b) {
  CMat4 s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.e[r][c] = a.e[r][c] - b.e[r][c];
  return s;
}

CMat4 operator*(CMat4::Scalar s, const CMat4& a) {
  CMat4 p;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) p.e[r][c] = s * a.e[r][c];
  return p;
}

double max_abs_diff(const CMat4& a, const CMat4& b) { return (a - b).max_abs(); }

CMat4 psi_embed(const QMat2& a) {
  const std::array<std::array<Quaternion, 2>, 2> q{{{a.m11, a.m12}, {a.m21, a.m22}}};
  CMat4 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const CMat4::Scalar z{q[r][c].w, q[r][c].x};
      const CMat4::Scalar w{q[r][c].y, q[r][c].z};
      m.e[r][c] = z;
      m.e[r][c + 2] = w;
      m.e[r + 2][c] = -std::conj(w);
      m.e[r + 2][c + 2] = std::conj(z);
    }
  return m;
}

CMat4 j2_matrix() { return psi_embed(QMat2::scalar(Quaternion::j())); }

CMat4 k11_matrix() { return psi_embed(QMat2::i11()); }

CMat4 k1i_matrix() {
  using C = CMat4::Scalar;
  return CMat4::diag(C{1, 0}, C{0, 1}, C{1, 0}, C{0, 1});
}

CMat4 rho(const CMat4& m) {
  using C = CMat4::Scalar;
  const CMat4 k_inv = CMat4::diag(C{1, 0}, C{0, -1}, C{1, 0}, C{0, -1});
  return k1i_matrix() * m * k_inv;
}

double hat_sp11_residual(const CMat4& m) {
  const CMat4 k = k11_matrix();
  const CMat4 j = j2_matrix();
  return std::max(max_abs_diff(m.adjoint() * k * m, k),
                  max_abs_diff(m.transpose() * j * m, j));
}

MembershipReport hat_sp11_check(const CMat4& m, double tol) {
  const double r = hat_sp11_residual(m);
  return {std::isfinite(r) && r <= tol, r};
}

}  // namespace slicegeo
