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

#include "slicegeo/json_io.hpp"

#include <gtest/gtest.h>

#include "slicegeo/cli/generators.hpp"
#include "slicegeo/random.hpp"

namespace slicegeo::io {
namespace {

TEST(JsonIoTest, QuaternionRoundTrip) {
  const Quaternion q{0.1, -2.5, 1e-300, 3.0};
  EXPECT_EQ(quaternion_from_json(parse(dump(to_json(q)))), q);
  EXPECT_EQ(quaternion_from_json(json(0.5)), Quaternion(0.5));
  EXPECT_THROW(quaternion_from_json(json::array({1, 2, 3})), ParseError);
  EXPECT_THROW(quaternion_from_json(json::array({1, 2, "x", 4})), ParseError);
  EXPECT_THROW(quaternion_from_json(json("1")), ParseError);
}

TEST(JsonIoTest, MatrixRoundTrip) {
  Sampler rng(101);
  const QMat2 a = cli::random_sp11(rng);
  EXPECT_EQ(qmat2_from_json(parse(dump(to_json(a)))), a);
  EXPECT_EQ(qmat2_from_json(parse("[[1,0],[0,-1]]")), QMat2::i11());
  EXPECT_THROW(qmat2_from_json(parse("[[1,0],[0]]")), ParseError);
  EXPECT_THROW(qmat2_from_json(parse("{\"m\":1}")), ParseError);
}

TEST(JsonIoTest, ComplexMatrixLayout) {
  const json j = to_json(CMat4::identity());
  ASSERT_EQ(j.size(), 4u);
  ASSERT_EQ(j[0].size(), 4u);
  EXPECT_EQ(dump(j[1][1]), "[1,0]");
  EXPECT_EQ(dump(j[1][2]), "[0,0]");
}

TEST(JsonIoTest, StarPolyRoundTrip) {
  const StarPoly p({1.0, Quaternion::i(), Quaternion{0, 0, 2, 0}});
  EXPECT_EQ(star_poly_from_json(parse(dump(to_json(p)))), p);
  EXPECT_THROW(star_poly_from_json(json(1.0)), ParseError);
}

TEST(JsonIoTest, Factorizations) {
  const SymmFactorization s{UnitQuaternion(Quaternion::i()), UnitQuaternion(Quaternion::j()),
                            0.3};
  const json j = to_json(s);
  EXPECT_TRUE(j.contains("u") && j.contains("v") && j.contains("X"));
  const SymmFactorization back = symm_factorization_from_json(j);
  EXPECT_EQ(back.u.value(), s.u.value());
  EXPECT_EQ(back.v.value(), s.v.value());
  EXPECT_EQ(back.x, s.x);

  const SliceFactorization f{UnitQuaternion(), Quaternion{0, 0.2, 0, 0},
                             UnitQuaternion(Quaternion::k())};
  const SliceFactorization g = slice_factorization_from_json(parse(dump(to_json(f))));
  EXPECT_EQ(g.x, f.x);
  EXPECT_EQ(g.v.value(), f.v.value());
  EXPECT_THROW(slice_factorization_from_json(parse("{\"u\":[2,0,0,0],\"v\":1,\"X\":0}")),
               ParseError);
  EXPECT_THROW(symm_factorization_from_json(parse("{\"u\":1}")), ParseError);
}

TEST(JsonIoTest, SeventeenDigitOutput) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(NAN), "null");
  EXPECT_EQ(dump(json{{"a", 0.1}, {"b", true}, {"c", "x"}, {"d", 3}}),
            "{\"a\":0.10000000000000001,\"b\":true,\"c\":\"x\",\"d\":3}");
  EXPECT_EQ(dump(json::array({1.5, 2.0}), 2), "[1.5, 2]");
  EXPECT_EQ(dump(json{{"p", json::array({0.5})}}, 2), "{\n  \"p\": [0.5]\n}");
}

TEST(JsonIoTest, ParseErrors) {
  EXPECT_THROW(parse("[1, 2"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

}  // namespace
}  // namespace slicegeo::io
