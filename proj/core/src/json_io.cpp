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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "slicegeo/errors.hpp"

namespace slicegeo::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) throw ParseError("expected a number, got " + j.dump());
  return j.get<double>();
}

UnitQuaternion unit_from_json(const json& j) {
  try {
    return UnitQuaternion(quaternion_from_json(j));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

void emit(const json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; they are quaternions and rows.
      const bool flat = std::none_of(j.begin(), j.end(),
                                     [](const json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const json& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        emit(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const QMat2& a) {
  return json::array({json::array({to_json(a.m11), to_json(a.m12)}),
                      json::array({to_json(a.m21), to_json(a.m22)})});
}

json to_json(const CMat4& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const StarPoly& p) {
  json out = json::array();
  for (const Quaternion& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const SymmFactorization& f) {
  return {{"u", to_json(f.u.value())}, {"v", to_json(f.v.value())}, {"X", to_json(f.x)}};
}

json to_json(const SliceFactorization& f) {
  return {{"u", to_json(f.u.value())}, {"v", to_json(f.v.value())}, {"X", to_json(f.x)}};
}

Quaternion quaternion_from_json(const json& j) {
  if (j.is_number()) return Quaternion(j.get<double>());
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("expected a quaternion [w, x, y, z], got " + j.dump());
  }
  return {number(j[0]), number(j[1]), number(j[2]), number(j[3])};
}

QMat2 qmat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw ParseError("expected a 2x2 quaternion matrix [[m11, m12], [m21, m22]]");
  }
  return {quaternion_from_json(j[0][0]), quaternion_from_json(j[0][1]),
          quaternion_from_json(j[1][0]), quaternion_from_json(j[1][1])};
}

StarPoly star_poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient list");
  std::vector<Quaternion> c;
  for (const json& e : j) c.push_back(quaternion_from_json(e));
  return StarPoly(std::move(c));
}

SymmFactorization symm_factorization_from_json(const json& j) {
  return {unit_from_json(member(j, "u")), unit_from_json(member(j, "v")),
          quaternion_from_json(member(j, "X"))};
}

SliceFactorization slice_factorization_from_json(const json& j) {
  return {unit_from_json(member(j, "u")), quaternion_from_json(member(j, "X")),
          unit_from_json(member(j, "v"))};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string dump(const json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

}  // namespace slicegeo::io
