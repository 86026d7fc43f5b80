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

#include "slicegeo/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace slicegeo {

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
  return r * std::cos(2.0 * std::numbers::pi * uniform());
}

int Sampler::sign() { return (engine_() >> 63) ? 1 : -1; }

Quaternion Sampler::gaussian(double sigma) {
  const double w = normal();
  const double x = normal();
  const double y = normal();
  const double z = normal();
  return Quaternion{w, x, y, z} * sigma;
}

UnitQuaternion Sampler::sphere3() {
  for (;;) {
    const Quaternion g = gaussian();
    const double n = g.norm();
    if (n > 1e-6) return UnitQuaternion::normalize(g / n, 1e-12);
  }
}

ImaginaryUnit Sampler::imaginary_unit() {
  for (;;) {
    const double x = normal();
    const double y = normal();
    const double z = normal();
    const double n = std::hypot(x, std::hypot(y, z));
    if (n > 1e-6) return ImaginaryUnit(Quaternion{0.0, x / n, y / n, z / n});
  }
}

BallPoint Sampler::ball(double max_radius) {
  const double rmax = std::clamp(max_radius, 0.0, 1.0 - 1e-9);
  const Quaternion dir = sphere3();
  // Radial density r^3 for uniformity in four dimensions.
  const double r = rmax * std::pow(uniform(), 0.25);
  return BallPoint(dir * r);
}

std::uint64_t Sampler::fork_seed() { return mix_seed(engine_(), 0); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Quaternion sample(SampleKind kind, std::uint64_t seed) {
  Sampler s(seed);
  switch (kind) {
    case SampleKind::ball:
      return s.ball();
    case SampleKind::sphere3:
      return s.sphere3();
    case SampleKind::imaginary_unit:
      return s.imaginary_unit();
    case SampleKind::real_interval:
      return Quaternion(s.uniform(-1.0, 1.0));
  }
  return {};
}

}  // namespace slicegeo
