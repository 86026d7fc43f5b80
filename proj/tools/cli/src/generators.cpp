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

#include "slicegeo/cli/generators.hpp"

namespace slicegeo::cli {

Sign random_sign(Sampler& rng) { return rng.sign() > 0 ? Sign::plus : Sign::minus; }

Quaternion random_m(Sampler& rng, double max_len) {
  const Quaternion dir = rng.sphere3();
  return dir * rng.uniform(0.0, max_len);
}

Sp11Element random_sp11(Sampler& rng, double max_log) {
  const UnitQuaternion u = rng.sphere3();
  const UnitQuaternion v = rng.sphere3();
  return Sp11Element::trusted(QMat2::diag(u, v)) * exp_m(random_m(rng, max_log));
}

Quaternion random_nonreal(Sampler& rng, double lo, double hi) {
  const double x = rng.uniform(-0.5, 0.5);
  const double y = rng.uniform(lo, hi);
  return Quaternion(x) + y * rng.imaginary_unit().value();
}

IsoGElement random_iso(Sampler& rng, double max_t) {
  IsoGElement e;
  e.u = rng.sphere3();
  e.eps1 = random_sign(rng);
  e.t = rng.uniform(-max_t, max_t);
  e.eps2 = random_sign(rng);
  return e;
}

StarPoly linear_with_zero(const Quaternion& a, const Quaternion& z) {
  return StarPoly::linear(a, -(z * a));
}

FactoredQuadratic random_factored_quadratic(Sampler& rng) {
  FactoredQuadratic f;
  f.zero = rng.ball(0.9);
  // Keep the leading coefficients away from zero.
  const auto leading = [&rng] {
    const Quaternion dir = rng.sphere3();
    return dir * rng.uniform(0.5, 2.0);
  };
  const Quaternion a1 = leading();
  const Quaternion a2 = leading();
  f.left = linear_with_zero(a1, f.zero);
  f.right = StarPoly::linear(a2, rng.gaussian());
  return f;
}

}  // namespace slicegeo::cli
