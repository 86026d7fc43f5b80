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

#include "slicegeo/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "slicegeo/cli/verify.hpp"
#include "slicegeo/errors.hpp"
#include "slicegeo/json_io.hpp"
#include "slicegeo/lie_structure.hpp"
#include "slicegeo/metrics.hpp"
#include "slicegeo/mobius.hpp"

namespace slicegeo::cli {

namespace {

using io::json;
using io::ParseError;

struct Options {
  std::string format;
  std::string file;
  std::string input;
  std::string what;
  std::string kind;
  std::string mode;
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 100;
  std::vector<std::string> tol;
  std::string u = "1";
  std::string a = "0";
  double t_min = -2.0;
  double t_max = 2.0;
  int steps = 5;
};

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "human") return Format::human;
  throw ParseError("unknown format: " + s);
}

json read_input(const Options& o, std::istream& in) {
  std::string text;
  if (!o.input.empty()) {
    text = o.input;
  } else if (!o.file.empty()) {
    std::ifstream f(o.file);
    if (!f) throw ParseError("cannot open " + o.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return io::parse(text);
}

// The matrix is either the whole document or its "matrix" field.
QMat2 read_matrix(const json& j) {
  return io::qmat2_from_json(j.is_object() ? j.value("matrix", json()) : j);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("input needs a \"") + key + "\" field");
  }
  return j.at(key);
}

std::string num(double v) { return io::format_double(v); }

std::string quat_text(const Quaternion& q) {
  return num(q.w) + "," + num(q.x) + "," + num(q.y) + "," + num(q.z);
}

void emit(std::ostream& out, Format f, const json& doc, const std::string& csv,
          const std::string& human) {
  switch (f) {
    case Format::json:
      out << io::dump(doc) << '\n';
      break;
    case Format::csv:
      out << csv;
      break;
    case Format::human:
      out << human;
      break;
  }
}

// ---- check ---------------------------------------------------------------

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format, Format::json);
  const QMat2 m = read_matrix(read_input(o, in));
  json doc{{"check", o.what}};
  bool pass = false;
  double residual = 0.0;
  std::string extra_human;

  if (o.what == "sp11") {
    const MembershipReport r = sp11_check(m);
    pass = r.member;
    residual = r.residual;
  } else if (o.what == "algebra") {
    const MembershipReport r = algebra_check(m);
    pass = r.member;
    residual = r.residual;
  } else if (o.what.rfind("centralizer:", 0) == 0) {
    const std::string name = o.what.substr(12);
    Subgroup s;
    if (name == "sp1x1") s = Subgroup::sp1x1;
    else if (name == "sp1I2") s = Subgroup::sp1I2;
    else if (name == "sp1xsp1") s = Subgroup::sp1xsp1;
    else throw ParseError("unknown centralizer: " + name);
    const Sp11Element a(m);  // DomainError outside the group
    residual = centralizer_residual(a, s);
    pass = residual <= kMembershipTol;
    doc["closed_form"] = in_centralizer(a, s);
  } else if (o.what == "o11") {
    const Sp11Element a(m);
    const O11Class c = o11_classify(a);
    residual = max_norm_diff(o11_compose(c), a);
    pass = residual <= kGroupTol;
    doc["eps"] = static_cast<int>(c.eps);
    doc["r"] = c.flip ? "I11" : "I2";
    doc["t"] = c.t;
    extra_human = " eps=" + std::to_string(static_cast<int>(c.eps)) +
                  " r=" + (c.flip ? "I11" : "I2") + " t=" + num(c.t);
  } else {
    throw ParseError("unknown check: " + o.what);
  }
  doc["pass"] = pass;
  doc["residual"] = residual;
  emit(out, f, doc, "check,pass,residual\n" + o.what + "," + (pass ? "true" : "false") + "," +
                        num(residual) + "\n",
       o.what + ": " + (pass ? "pass" : "fail") + " residual=" + num(residual) + extra_human +
           "\n");
  return pass ? kExitPass : kExitFail;
}

// ---- mobius --------------------------------------------------------------

int cmd_mobius(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format, Format::json);
  const json j = read_input(o, in);
  const QMat2 m = io::qmat2_from_json(field(j, "matrix"));
  const Quaternion p = io::quaternion_from_json(field(j, "point"));
  MobiusKind kind;
  if (o.kind == "classical") kind = MobiusKind::classical;
  else if (o.kind == "regular") kind = MobiusKind::regular;
  else throw ParseError("unknown kind: " + o.kind);
  const MobiusMap map(Sp11Element(m), kind);
  const Quaternion image = map(BallPoint(p)).value();
  emit(out, f, {{"kind", o.kind}, {"point", io::to_json(image)}},
       "w,x,y,z\n" + quat_text(image) + "\n", o.kind + " image: " + quat_text(image) + "\n");
  return kExitPass;
}

// ---- decompose -----------------------------------------------------------

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format, Format::json);
  const Sp11Element a(read_matrix(read_input(o, in)));
  json doc{{"mode", o.mode}};
  Quaternion u, v, x;
  double residual = 0.0;
  if (o.mode == "symm") {
    const SymmFactorization s = symm_decompose(a);
    residual = max_norm_diff(symm_compose(s), a);
    doc["factorization"] = io::to_json(s);
    u = s.u;
    v = s.v;
    x = s.x;
  } else if (o.mode == "slice") {
    const SliceFactorization s = slice_decompose(a);
    residual = max_norm_diff(slice_compose(s), a);
    doc["factorization"] = io::to_json(s);
    u = s.u;
    v = s.v;
    x = s.x;
  } else {
    throw ParseError("unknown mode: " + o.mode);
  }
  const bool pass = residual <= kDecompositionTol;
  doc["residual"] = residual;
  doc["pass"] = pass;
  emit(out, f, doc,
       "factor,w,x,y,z\nu," + quat_text(u) + "\nX," + quat_text(x) + "\nv," + quat_text(v) +
           "\n",
       o.mode + " u=" + quat_text(u) + " X=" + quat_text(x) + " v=" + quat_text(v) +
           " residual=" + num(residual) + "\n");
  return pass ? kExitPass : kExitFail;
}

// ---- metric --------------------------------------------------------------

int cmd_metric(const Options& o, std::istream& in, std::ostream& out) {
  const Format f = parse_format(o.format, Format::json);
  const json j = read_input(o, in);
  const BallPoint q(io::quaternion_from_json(field(j, "point")));
  const Quaternion alpha = io::quaternion_from_json(field(j, "alpha"));
  const Quaternion beta = io::quaternion_from_json(field(j, "beta"));
  json value;
  std::string text;
  if (o.kind == "g" || o.kind == "ghat") {
    const double v = o.kind == "g" ? slice_g(q, alpha, beta) : poincare_g(q, alpha, beta);
    value = v;
    text = num(v);
  } else if (o.kind == "h" || o.kind == "omega") {
    const Quaternion v = o.kind == "h" ? slice_h(q, alpha, beta) : slice_omega(q, alpha, beta);
    value = io::to_json(v);
    text = quat_text(v);
  } else {
    throw ParseError("unknown metric: " + o.kind);
  }
  emit(out, f, {{"kind", o.kind}, {"value", value}}, "value\n" + text + "\n",
       o.kind + " = " + text + "\n");
  return kExitPass;
}

// ---- verify --------------------------------------------------------------

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--tol expects name=value, got " + item);
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    if (!is_check(name)) throw ParseError("unknown check in --tol: " + name);
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value) || value < 0.0) {
      throw ParseError("--tol value must be a finite number >= 0, got " + text);
    }
    out[name] = value;
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.format = parse_format(o.format, Format::human);
  config.tol = parse_tolerances(o.tol);
  if (!is_suite(o.suite)) throw ParseError("unknown suite: " + o.suite);

  const std::vector<CheckResult> results = run_suite(o.suite, config);
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });

  json checks = json::array();
  std::string csv = "check,bound,value,tolerance,pass\n";
  std::string human;
  double total = 0.0;
  for (const CheckResult& r : results) {
    const char* bound = r.bound == Bound::upper ? "max" : "min";
    json c{{"name", r.name}, {"bound", bound}, {"value", r.value}, {"tolerance", r.tol},
           {"pass", r.pass}};
    if (!r.error.empty()) c["error"] = r.error;
    checks.push_back(c);
    csv += r.name + "," + bound + "," + num(r.value) + "," + num(r.tol) + "," +
           (r.pass ? "true" : "false") + "\n";
    human += std::string(r.pass ? "PASS " : "FAIL ") + r.name + "  " + bound + "=" +
             num(r.value) + "  tol=" + num(r.tol) +
             (r.error.empty() ? "" : "  error: " + r.error) + "\n";
    // Timing goes to stderr so that stdout depends only on seed and config.
    char line[160];
    std::snprintf(line, sizeof line, "time %s %.3f s\n", r.name.c_str(), r.seconds);
    err << line;
    total += r.seconds;
  }
  char line[80];
  std::snprintf(line, sizeof line, "time total %.3f s\n", total);
  err << line;
  human += std::to_string(results.size()) + " checks, " +
           (all_pass ? "all passed" : "some FAILED") + "\n";
  const json doc{{"suite", o.suite},      {"seed", o.seed},   {"trials", o.trials},
                 {"checks", checks},      {"pass", all_pass}};
  emit(out, config.format, doc, csv, human);
  return all_pass ? kExitPass : kExitFail;
}

// ---- table ---------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format, Format::csv);
  UnitQuaternion u;
  try {
    u = UnitQuaternion(io::quaternion_from_json(io::parse(o.u)));
  } catch (const DomainError& e) {
    throw ParseError(std::string("--u: ") + e.what());
  }
  BallPoint a;
  if (o.kind == "orbit") {
    a = BallPoint(io::quaternion_from_json(io::parse(o.a)));
  } else if (o.kind != "geodesic") {
    throw ParseError("unknown table kind: " + o.kind);
  }
  const std::vector<TableRow> rows = orbit_table(u, a, o.t_min, o.t_max, o.steps);
  std::ostringstream csv;
  write_csv(csv, rows);
  json doc = json::array();
  std::string human;
  for (const TableRow& r : rows) {
    doc.push_back({{"t", r.t}, {"point", io::to_json(r.q)}});
    human += "t=" + num(r.t) + "  q=" + quat_text(r.q) + "\n";
  }
  emit(out, f, {{"kind", o.kind}, {"rows", doc}}, csv.str(), human);
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Numerics on the quaternionic unit ball and Sp(1,1)", "slicegeo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "slicegeo 0.1.0");

  const auto add_io = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, csv or human");
    c->add_option("--file", o.file, "read the JSON input from a file");
    c->add_option("--input", o.input, "JSON input given inline");
  };

  CLI::App* check = app.add_subcommand("check", "membership and structure checks on a matrix");
  check->add_option("--what", o.what, "sp11, algebra, centralizer:<sp1x1|sp1I2|sp1xsp1>, o11")
      ->required();
  add_io(check);

  CLI::App* mobius = app.add_subcommand("mobius", "apply a Möbius transformation to a point");
  mobius->add_option("--kind", o.kind, "classical or regular")->required();
  add_io(mobius);

  CLI::App* decompose = app.add_subcommand("decompose", "factor an Sp(1,1) matrix");
  decompose->add_option("--mode", o.mode, "symm or slice")->required();
  add_io(decompose);

  CLI::App* metric = app.add_subcommand("metric", "evaluate a metric on two tangent vectors");
  metric->add_option("--kind", o.kind, "g, ghat, h or omega")->required();
  add_io(metric);

  CLI::App* verify = app.add_subcommand("verify", "run the randomized verification suites");
  verify->add_option("--suite", o.suite, "all, metrics, decompose, mobius, isometry, orbits");
  verify->add_option("--seed", o.seed, "master seed");
  verify->add_option("--trials", o.trials, "samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "tolerance override, name=value")->take_all();
  verify->add_option("--format", o.format, "json, csv or human");

  CLI::App* table = app.add_subcommand("table", "sample a geodesic or orbit as CSV");
  table->add_option("--kind", o.kind, "geodesic or orbit")->required();
  table->add_option("--u", o.u, "unit quaternion direction, JSON");
  table->add_option("--a", o.a, "orbit base point, JSON");
  table->add_option("--t-min", o.t_min);
  table->add_option("--t-max", o.t_max);
  table->add_option("--steps", o.steps)->check(CLI::Range(2, 100000000));
  table->add_option("--format", o.format, "json, csv or human");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitParse;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out);
    if (mobius->parsed()) return cmd_mobius(o, in, out);
    if (decompose->parsed()) return cmd_decompose(o, in, out);
    if (metric->parsed()) return cmd_metric(o, in, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << " (residual " << num(e.residual()) << ")\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitParse;
}

}  // namespace slicegeo::cli
