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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slicegeo/quaternion.hpp"
#include "slicegeo/star_poly.hpp"

namespace slicegeo {

// Quaternionic Poincaré metric Re(a conj(b)) / (1 - |q|^2)^2.
double poincare_g(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta);

// Slice Hermitian metric
//   h_q(a, b) = (1 - q^2)^-1 (a - q a q) conj(b - q b q) (1 - conj(q)^2)^-1
//               / (1 - |q|^2)^2.
// On each slice C_I it restricts to the hyperbolic metric of the disc.
Quaternion slice_h(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta);

// g = Re h, omega = Im h.
double slice_g(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta);
Quaternion slice_omega(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta);

enum class MetricKind { g, ghat, h, omega };

// Real-valued metrics only: MetricKind::g or MetricKind::ghat.
double metric_value(MetricKind kind, const BallPoint& q, const Quaternion& alpha,
                    const Quaternion& beta);

// max over `trials` random unit pairs (a, b) of
//   | m_q(a, b) - m_{f(q)}(df a, df b) |
// with df the central-difference Jacobian of step h.
double pullback_residual(const QuaternionMap& f, MetricKind kind, const BallPoint& q,
                         int trials, std::uint64_t seed, double h = 1e-5);

// (1 + tanh(t) a conj(u))^-1 (a + tanh(t) u): the orbit through a of the
// one-parameter group t -> exp_m(t u). For a = 0, the unit-speed geodesic of
// the Poincaré metric in direction u.
BallPoint symm_geodesic(const UnitQuaternion& u, const BallPoint& a, double t);

// tanh(t) u.
BallPoint slice_ray(const UnitQuaternion& u, double t);

struct TableRow {
  double t = 0.0;
  Quaternion q;
};

// steps >= 2 evenly spaced samples of symm_geodesic over [t_min, t_max].
// Throws DomainError for steps < 2 or a non-finite range.
std::vector<TableRow> orbit_table(const UnitQuaternion& u, const BallPoint& a, double t_min,
                                  double t_max, int steps);

// Header "t,w,x,y,z", then one row per sample, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace slicegeo
