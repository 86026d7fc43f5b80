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
#include <random>

#include "slicegeo/quaternion.hpp"

namespace slicegeo {

enum class SampleKind { ball, sphere3, imaginary_unit, real_interval };

// Reproducible sampler. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; the uniform and normal transforms are written
// out here rather than taken from <random>, whose distributions differ across
// standard library implementations. Same seed, same numbers, every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal (Box-Muller).
  double normal();
  // +1 or -1 with equal probability.
  int sign();

  // Uniform in the 4-ball of radius max_radius (clamped below 1 - 1e-9).
  BallPoint ball(double max_radius = 0.95);
  UnitQuaternion sphere3();
  ImaginaryUnit imaginary_unit();
  // Gaussian quaternion, each coordinate N(0, sigma^2).
  Quaternion gaussian(double sigma = 1.0);

  // Derives an independent child seed; the i-th child of a given sampler
  // state is fixed.
  std::uint64_t fork_seed();

 private:
  std::mt19937_64 engine_;
};

// One-shot sampling, deterministic in the seed. real_interval samples
// uniformly on (-1, 1) and returns it as a real quaternion.
Quaternion sample(SampleKind kind, std::uint64_t seed);

// splitmix64 finalizer; used to derive per-check seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace slicegeo
