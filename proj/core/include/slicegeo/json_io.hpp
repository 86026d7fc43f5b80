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

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "slicegeo/hmat.hpp"
#include "slicegeo/lie_structure.hpp"
#include "slicegeo/quaternion.hpp"
#include "slicegeo/star_poly.hpp"

namespace slicegeo::io {

using nlohmann::json;

// Malformed or mistyped input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wire formats:
//   quaternion  [w, x, y, z]; a bare number is read as a real quaternion
//   QMat2       [[m11, m12], [m21, m22]]
//   CMat4       4 rows of 4 [re, im] pairs
//   StarPoly    [a0, a1, ...], a_n the coefficient of q^n
//   factorization {"u": quat, "v": quat, "X": quat}, X the m_B direction
json to_json(const Quaternion& q);
json to_json(const QMat2& a);
json to_json(const CMat4& m);
json to_json(const StarPoly& p);
json to_json(const SymmFactorization& f);
json to_json(const SliceFactorization& f);

Quaternion quaternion_from_json(const json& j);
QMat2 qmat2_from_json(const json& j);
StarPoly star_poly_from_json(const json& j);
SymmFactorization symm_factorization_from_json(const json& j);
SliceFactorization slice_factorization_from_json(const json& j);

// Throws ParseError with the parser's message.
json parse(const std::string& text);

// Serializes with every floating-point number printed as %.17g, so output
// is stable across library versions. indent < 0 gives a single line.
std::string dump(const json& j, int indent = -1);

// %.17g, with -0 printed as 0. Non-finite values print as null.
std::string format_double(double v);

}  // namespace slicegeo::io
