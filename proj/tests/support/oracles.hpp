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

#include "slicegeo/hmat.hpp"
#include "slicegeo/quaternion.hpp"

// Reference computations that share no code path with the library.
namespace slicegeo::testing {

// Complex matrix exponential (Eigen MatrixFunctions, Padé with scaling and
// squaring).
CMat4 complex_exp(const CMat4& m);

// Newton's method on a map R^4 -> R^4 with a central-difference Jacobian.
// Returns the last iterate.
Quaternion newton_zero(const std::function<Quaternion(const Quaternion&)>& f, Quaternion start,
                       int iterations = 50);

// The orbit invariant by brute force: move the slice coordinate z of q along
// (z + tanh t) / (1 + tanh t z) for t on a grid of `samples` points in
// [-5, 5] and return |Im| where |Re| is smallest.
double grid_orbit_invariant(const Quaternion& q, int samples = 10000);

}  // namespace slicegeo::testing
