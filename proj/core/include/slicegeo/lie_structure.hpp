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

#include "slicegeo/hmat.hpp"
#include "slicegeo/mobius.hpp"
#include "slicegeo/quaternion.hpp"

namespace slicegeo {

// Residual bound for recomposition and for extracting unit factors.
inline constexpr double kDecompositionTol = 1e-9;

// A = diag(u, v) exp(X), with X = (0 conj(x); x 0) in m_B.
struct SymmFactorization {
  UnitQuaternion u;
  UnitQuaternion v;
  Quaternion x;

  Sp11AlgebraElement algebra() const { return Sp11AlgebraElement::m_part(x); }
};

// A = diag(u, 1) exp(X) v.
struct SliceFactorization {
  UnitQuaternion u;
  Quaternion x;
  UnitQuaternion v;

  Sp11AlgebraElement algebra() const { return Sp11AlgebraElement::m_part(x); }
};

// With a = F_A(0): x = artanh|a| sgn(a) and diag(u, v) = A exp_m(-x).
// Throws BoundaryError if |a| is within 1e-12 of 1, ConsistencyError if
// A exp_m(-x) is not diagonal with unit entries to within 1e-9.
SymmFactorization symm_decompose(const Sp11Element& a);
Sp11Element symm_compose(const SymmFactorization& f);

// With p = Phi(A): x = artanh|p| sgn(p), u = m11 m22^-1 and v read off the
// scalar matrix exp_m(-x) diag(conj(u), 1) A. Throws ConsistencyError if that
// matrix is more than 1e-9 away from scalar.
SliceFactorization slice_decompose(const Sp11Element& a);
Sp11Element slice_compose(const SliceFactorization& f);

// Isometry (u, eps1, H(t), eps2) of the slice metric:
//   q -> eps1 u (1 + tanh(t) q')^-1 (q' + tanh(t)) conj(u),
// where q' = conj(q) if eps2 = -1 and q' = q otherwise.
struct IsoGElement {
  UnitQuaternion u;
  Sign eps1 = Sign::plus;
  double t = 0.0;
  Sign eps2 = Sign::plus;

  static IsoGElement identity() { return {}; }
};

BallPoint iso_g_act(const IsoGElement& e, const BallPoint& q);

// Componentwise on the Sp(1) and the last Z2 factor; on (eps, H(t))
//   (e1, t1) * (e2, t2) = (e1 e2, e2 t1 + t2).
// With this law act(e1 * e2) = act(e1) o act(e2), so iso_g_act is a left
// action.
IsoGElement iso_g_mul(const IsoGElement& a, const IsoGElement& b);
inline IsoGElement operator*(const IsoGElement& a, const IsoGElement& b) {
  return iso_g_mul(a, b);
}
IsoGElement iso_g_inverse(const IsoGElement& e);

enum class Subgroup {
  sp1x1,    // Sp(1) x {1}
  sp1I2,    // Sp(1) I2
  sp1xsp1,  // Sp(1) x Sp(1)
};

// max over the generating probes of the subgroup of ||A P - P A||_max. The
// probes are diag(i, 1), diag(j, 1) for sp1x1, i I2, j I2 for sp1I2, and all
// four for sp1xsp1.
double centralizer_residual(const QMat2& a, Subgroup s);
bool centralizer_check(const QMat2& a, Subgroup s, double tol = kMembershipTol);

// Membership in the known centralizers: {+-1} x Sp(1), O(1,1) and
// {+-I2, +-I11}.
bool in_centralizer(const QMat2& a, Subgroup s, double tol = kMembershipTol);

// The y in [0, 1) of the orbit O_y through q. Real points give exactly 0.
double orbit_invariant(const BallPoint& q);

}  // namespace slicegeo
