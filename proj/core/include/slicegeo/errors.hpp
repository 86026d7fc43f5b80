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

#include <stdexcept>
#include <string>

namespace slicegeo {

// Input outside the domain of an operation: inverse of zero, a point on or
// outside the unit sphere, a matrix that is not in Sp(1,1), and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A point sits numerically too close to the unit sphere for artanh or
// (1 - |q|^2)^-1 to be evaluated safely.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// f^s vanishes at the evaluation point, so the *-inverse has a pole there.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An identity that must hold for valid inputs failed by more than its
// tolerance. Usually means the input was not where the caller claimed.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Broken internal invariant (for example a Möbius denominator vanishing
// inside the ball).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace slicegeo
