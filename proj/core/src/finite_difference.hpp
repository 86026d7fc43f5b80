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

#include <algorithm>
#include <cmath>
#include <limits>

#include "slicegeo/errors.hpp"
#include "slicegeo/quaternion.hpp"

namespace slicegeo::detail {

// A central-difference step must survive being added to q.
inline void check_step(double h, const Quaternion& q) {
  const double floor =
      1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, q.norm());
  if (!std::isfinite(h) || !(h > floor)) {
    throw DomainError("finite-difference step underflows at this point");
  }
}

}  // namespace slicegeo::detail
