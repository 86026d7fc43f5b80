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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "slicegeo/random.hpp"

namespace slicegeo::cli {

enum class Format { json, csv, human };

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  std::map<std::string, double> tol;  // overrides by check name
  Format format = Format::json;
};

// upper: pass iff value <= tol. lower: pass iff value >= tol.
enum class Bound { upper, lower };

struct CheckSpec {
  std::string name;  // "<suite>.<check>"
  std::string suite;
  double tol;
  Bound bound;
  // Runs `trials` randomized cases and returns the worst value seen.
  std::function<double(Sampler&, int trials)> run;
};

// Every check, in a fixed order. The per-check seed is derived from the
// master seed and the position in this list.
const std::vector<CheckSpec>& registry();

bool is_suite(const std::string& name);
bool is_check(const std::string& name);

// A tolerance must be positive to pass anything; a corrupted tolerance of 0
// fails every check it applies to.
bool passes(double value, double tol, Bound bound);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  Bound bound = Bound::upper;
  bool pass = false;
  double seconds = 0.0;
  std::string error;  // set when the check threw; value is then NaN
};

// Runs every check of `suite` ("all" for every suite). Throws
// std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& config);

}  // namespace slicegeo::cli
