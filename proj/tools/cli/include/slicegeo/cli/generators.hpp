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
#include "slicegeo/lie_structure.hpp"
#include "slicegeo/mobius.hpp"
#include "slicegeo/random.hpp"
#include "slicegeo/star_poly.hpp"

// Random inputs shared by the verify suites and the tests. Sizes are kept
// moderate: matrix entries stay below cosh(max_log) and ball points away from
// the boundary, where finite differences lose digits.
namespace slicegeo::cli {

Sign random_sign(Sampler& rng);

// direction * uniform[0, max_len).
Quaternion random_m(Sampler& rng, double max_len);

// diag(u, v) exp_m(x) with |x| < max_log.
Sp11Element random_sp11(Sampler& rng, double max_log = 1.5);

// x + y I with lo <= y < hi, |x| < 0.5 and I random.
Quaternion random_nonreal(Sampler& rng, double lo, double hi);

// Uniform t in (-max_t, max_t); both signs random.
IsoGElement random_iso(Sampler& rng, double max_t = 1.5);

// q a + b with zero z = -b a^-1.
StarPoly linear_with_zero(const Quaternion& a, const Quaternion& z);

// P = L1 * L2 whose first factor vanishes at `zero`. A zero of the left
// factor is a zero of the product.
struct FactoredQuadratic {
  StarPoly left;
  StarPoly right;
  Quaternion zero;
  StarPoly product() const { return left * right; }
};

FactoredQuadratic random_factored_quadratic(Sampler& rng);

}  // namespace slicegeo::cli
