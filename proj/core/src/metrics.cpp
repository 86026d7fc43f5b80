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

#include "slicegeo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "slicegeo/errors.hpp"
#include "slicegeo/mobius.hpp"
#include "slicegeo/random.hpp"

namespace slicegeo {

double poincare_g(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta) {
  const double d = 1.0 - q.value().norm2();
  return (alpha * beta.conj()).w / (d * d);
}

Quaternion slice_h(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta) {
  const Quaternion& p = q.value();
  const double d = 1.0 - p.norm2();
  const Quaternion a = alpha - p * alpha * p;
  const Quaternion b = beta - p * beta * p;
  const Quaternion left = (1.0 - p * p).inverse();
  const Quaternion right = (1.0 - p.conj() * p.conj()).inverse();
  return left * a * b.conj() * right / (d * d);
}

double slice_g(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta) {
  return slice_h(q, alpha, beta).w;
}

Quaternion slice_omega(const BallPoint& q, const Quaternion& alpha, const Quaternion& beta) {
  return slice_h(q, alpha, beta).im();
}

double metric_value(MetricKind kind, const BallPoint& q, const Quaternion& alpha,
                    const Quaternion& beta) {
  switch (kind) {
    case MetricKind::g:
      return slice_g(q, alpha, beta);
    case MetricKind::ghat:
      return poincare_g(q, alpha, beta);
    default:
      throw DomainError("metric_value: h and omega are not real-valued");
  }
}

double pullback_residual(const QuaternionMap& f, MetricKind kind, const BallPoint& q,
                         int trials, std::uint64_t seed, double h) {
  const Jacobian df = differential(f, q.value(), h);
  const BallPoint image(f(q.value()));
  Sampler rng(seed);
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Quaternion alpha = rng.sphere3();
    const Quaternion beta = rng.sphere3();
    const double lhs = metric_value(kind, q, alpha, beta);
    const double rhs = metric_value(kind, image, df.apply(alpha), df.apply(beta));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

BallPoint symm_geodesic(const UnitQuaternion& u, const BallPoint& a, double t) {
  const double tau = std::tanh(t);
  const Quaternion& p = a.value();
  return BallPoint((1.0 + tau * p * u.value().conj()).inverse() * (p + tau * u.value()));
}

BallPoint slice_ray(const UnitQuaternion& u, double t) {
  return BallPoint(std::tanh(t) * u.value());
}

std::vector<TableRow> orbit_table(const UnitQuaternion& u, const BallPoint& a, double t_min,
                                  double t_max, int steps) {
  if (steps < 2) throw DomainError("table needs at least 2 steps");
  if (!std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw DomainError("table range must be finite");
  }
  std::vector<TableRow> rows;
  rows.reserve(steps);
  for (int n = 0; n < steps; ++n) {
    // Pin both ends exactly; interior samples by linear interpolation.
    const double s = static_cast<double>(n) / (steps - 1);
    const double t = n == steps - 1 ? t_max : t_min + s * (t_max - t_min);
    rows.push_back({t, symm_geodesic(u, a, t).value()});
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "t,w,x,y,z\n";
  char buf[160];
  for (const TableRow& r : rows) {
    // + 0.0 turns -0 into 0.
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t + 0.0, r.q.w + 0.0,
                  r.q.x + 0.0, r.q.y + 0.0, r.q.z + 0.0);
    os << buf;
  }
}

}  // namespace slicegeo
