#include "minkval/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"
#include "minkval/io.hpp"
#include "minkval/operators.hpp"

namespace minkval {

namespace {

struct Options {
  std::string input, op, params, out, mode, basis;
  std::vector<std::string> at, names;
  std::uint64_t seed = 20240601;
  std::size_t probes = 0;
  std::size_t resolution = 360;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

OperatorSpec resolve_spec(const Options& o) {
  nlohmann::json j;
  if (std::filesystem::is_regular_file(o.op)) {
    j = read_json_file(o.op);
    if (!j.is_object()) throw Error(ErrorCode::kParseError, o.op + ": operator spec must be an object");
  } else {
    j["family"] = o.op;
  }
  if (!o.params.empty()) {
    nlohmann::json extra;
    try {
      extra = nlohmann::json::parse(o.params);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kParseError, std::string("--params: ") + e.what());
    }
    if (!extra.is_object()) throw Error(ErrorCode::kParseError, "--params must be a JSON object");
    j.update(extra);
  }
  OperatorSpec spec = OperatorSpec::from_json(j);
  if (!o.mode.empty()) {
    spec.mode = parse_mode(o.mode);
  } else if (!j.contains("mode")) {
    const char* env = std::getenv("EXACT");
    if (env && std::string(env) == "0") spec.mode = Mode::kFloat;
  }
  return spec;
}

std::string exponent_str(const Operator& op) { return op.exponent().str(); }

int cmd_compute(const Options& o, std::ostream& out) {
  const Polytope p = polytope_from_json(read_json_file(o.input));
  const OperatorSpec spec = resolve_spec(o);
  const Operator op = Operator::make(spec, p.ambient_dim());
  const OperatorValue val = op.apply(p);

  nlohmann::json j;
  j["operator"] = spec.to_json();
  j["mode"] = to_string(spec.mode);
  j["variance"] = op.variance() == Variance::kCovariant ? "covariant" : "contravariant";
  if (op.degree()) j["degree"] = to_string(*op.degree());
  j["input"] = polytope_to_json(p);
  out << spec.label() << " on a " << p.dim() << "-dimensional polytope in R^" << p.ambient_dim() << "\n";
  if (val.body) {
    j["kind"] = "polytope";
    const auto body = polytope_to_json(*val.body);
    j["n"] = body["n"];
    j["dim"] = body["dim"];
    j["vertices"] = body["vertices"];
    out << "result: polytope of dimension " << val.body->dim() << " with " << val.body->vertices().size()
        << " vertices\n";
    for (const auto& v : val.body->vertices()) out << "  " << v.str() << "\n";
  } else {
    j["kind"] = "field";
    j["exponent"] = exponent_str(op);
    std::vector<Vector> xs;
    for (const auto& a : o.at) xs.push_back(parse_vector(a));
    if (xs.empty() || o.probes > 0) {
      for (auto& x : probe_set(p.ambient_dim(), o.probes > 0 ? o.probes : 20, o.seed)) xs.push_back(std::move(x));
    }
    j["seed"] = o.seed;
    j["samples"] = nlohmann::json::array();
    for (const auto& x : xs) {
      const Scalar h = val.field.eval(x);
      j["samples"].push_back({{"x", vector_to_json(x)}, {"h", h.str()}, {"h_pow", val.field.power(x).str()}});
      out << "  h" << x.str() << " = " << h.str() << "\n";
    }
  }
  if (!o.out.empty()) write_text_file(o.out, j.dump(2) + "\n");
  return 0;
}

void print_bundle(const VerdictBundle& b, std::ostream& out) {
  for (const auto& v : b.suites) {
    out << v.suite << ": " << v.passed() << "/" << v.cases.size() << (v.ok() ? " ok" : " FAILED") << " ("
        << seconds(v.seconds) << " s)\n";
    for (const auto& c : v.cases) {
      if (c.ok()) continue;
      out << "  unexpected " << (c.pass ? "pass" : "failure") << ": " << c.key << "\n";
      if (c.witness) out << "    x = " << c.witness->x.str() << ", " << c.witness->lhs << " vs " << c.witness->rhs << "\n";
    }
  }
  out << (b.ok() ? "all suites ok" : "verification FAILED") << "\n";
}

int finish_bundle(const VerdictBundle& b, const SuiteConfig& cfg, const Options& o, std::ostream& out) {
  print_bundle(b, out);
  if (!o.out.empty()) {
    nlohmann::json j = b.to_json();
    j["config"] = cfg.to_json();
    write_text_file(o.out, j.dump(2) + "\n");
  }
  return b.ok() ? 0 : 1;
}

void apply_overrides(SuiteConfig& cfg, const Options& o, bool seed_given) {
  if (o.probes > 0) cfg.probes = o.probes;
  if (seed_given) cfg.seed = o.seed;
}

int cmd_verify(const Options& o, bool seed_given, std::ostream& out) {
  SuiteConfig cfg;
  try {
    cfg = SuiteConfig::from_json(read_json_file(o.input));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    throw Error(ErrorCode::kConfigError, e.what());
  }
  apply_overrides(cfg, o, seed_given);
  return finish_bundle(run_suite(cfg), cfg, o, out);
}

int cmd_suite(const Options& o, bool seed_given, std::ostream& out) {
  SuiteConfig cfg;
  const auto& known = suite_names();
  for (const auto& n : o.names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw Error(ErrorCode::kConfigError, "unknown suite '" + n + "'");
    }
    cfg.suites.insert(n);
  }
  apply_overrides(cfg, o, seed_given);
  return finish_bundle(run_suite(cfg), cfg, o, out);
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  const auto r = sublinearity_counterexample(o.seed, o.probes > 0 ? o.probes : 500);
  out << "P = [-e1, e1, e2, e3, e4], (a1, a2, b1, b2) = (0, 1, 0, 0), p = 1\n";
  out << "  h(1,3,3,2) = " << r.at_x.str() << "\n";
  out << "  h(1,3,2,3) = " << r.at_y.str() << "\n";
  out << "  h(2,6,5,5) = " << r.at_sum.str() << "\n";
  out << "  h(x + y) - h(x) - h(y) = " << r.margin.str() << "\n";
  out << "  closed form agrees: " << (r.closed_form_agrees ? "yes" : "no") << "\n";
  out << "  sampler finds a violation: " << (r.sampler_finds_violation ? "yes" : "no") << "\n";
  out << "  R^3 analogue subadditive: " << (r.planar_analogue_subadditive ? "yes" : "no") << "\n";
  if (!o.out.empty()) {
    nlohmann::json j = r.verdict.to_json();
    j["values"] = {{"h_x", r.at_x.str()}, {"h_y", r.at_y.str()}, {"h_x_plus_y", r.at_sum.str()},
                   {"margin", r.margin.str()}};
    write_text_file(o.out, j.dump(2) + "\n");
  }
  return r.verdict.ok() ? 0 : 1;
}

int cmd_slice(const Options& o, std::ostream& out) {
  const Polytope p = polytope_from_json(read_json_file(o.input));
  const std::size_t n = p.ambient_dim();
  const OperatorSpec spec = resolve_spec(o);
  const Operator op = Operator::make(spec, n);
  const SupportEval h = op.field(p);

  std::vector<Vector> basis;
  std::stringstream ss(o.basis);
  std::string item;
  while (std::getline(ss, item, ';')) basis.push_back(parse_vector(item));
  if (basis.size() != 2) throw Error(ErrorCode::kParseError, "--basis needs two vectors separated by ';'");
  for (const auto& b : basis)
    if (b.size() != n) throw Error(ErrorCode::kDimensionMismatch, "basis vector " + b.str() + " is not in R^" + std::to_string(n));
  if (rank(Matrix::from_rows(basis)) != 2) {
    throw Error(ErrorCode::kDegenerateBasis, "basis vectors are linearly dependent");
  }
  const Vector u2 = basis[1] - (dot(basis[0], basis[1]) / dot(basis[0], basis[0])) * basis[0];
  std::vector<std::vector<double>> unit;
  for (const auto& b : {basis[0], u2}) {
    auto d = b.to_double();
    double norm = 0;
    for (double c : d) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : d) c /= norm;
    unit.push_back(d);
  }
  if (o.resolution < 1) throw Error(ErrorCode::kParseError, "--resolution must be positive");

  std::string csv = "theta,h\n";
  for (std::size_t k = 0; k < o.resolution; ++k) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o.resolution);
    const double c = std::cos(theta), s = std::sin(theta);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = c * unit[0][i] + s * unit[1][i];
    csv += fmt(theta) + "," + fmt(h.eval(Vector::from_double(x)).to_double()) + "\n";
  }
  if (o.out.empty()) {
    out << csv;
  } else {
    write_text_file(o.out, csv);
    out << "wrote " << o.resolution << " rows of " << spec.label() << " to " << o.out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact L_p Minkowski valuation operators on polytopes"};
  app.require_subcommand(1);
  Options o;

  auto add_operator = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "polytope JSON file")->required();
    sub->add_option("--operator", o.op, "family name or operator spec JSON file")->required();
    sub->add_option("--params", o.params, "JSON object merged into the operator spec");
    sub->add_option("--mode", o.mode, "exact, float or unchecked")->check(CLI::IsMember({"exact", "float", "unchecked"}));
    sub->add_option("--out", o.out, "output file");
  };

  auto* compute = app.add_subcommand("compute", "apply an operator to a polytope");
  add_operator(compute);
  compute->add_option("--at", o.at, "direction to evaluate, e.g. 1,0,0 (repeatable)");
  compute->add_option("--probes", o.probes, "number of probe directions");
  auto* seed_compute = compute->add_option("--seed", o.seed, "probe seed");

  auto* verify = app.add_subcommand("verify", "run the suites of a config file");
  verify->add_option("--input", o.input, "suite config JSON")->required();
  verify->add_option("--out", o.out, "verdict bundle JSON");
  verify->add_option("--probes", o.probes, "override the probe count");
  auto* seed_verify = verify->add_option("--seed", o.seed, "override the seed");

  auto* suite = app.add_subcommand("suite", "run the default suites");
  suite->add_option("--name", o.names, "suite to run (repeatable; default all)");
  suite->add_option("--out", o.out, "verdict bundle JSON");
  suite->add_option("--probes", o.probes, "override the probe count");
  auto* seed_suite = suite->add_option("--seed", o.seed, "override the seed");

  auto* counter = app.add_subcommand("counterexample", "the four-dimensional sublinearity counterexample");
  counter->add_option("--out", o.out, "verdict JSON");
  counter->add_option("--probes", o.probes, "random probe pairs");
  counter->add_option("--seed", o.seed, "sampling seed");

  auto* slice = app.add_subcommand("slice", "support values along a circle in a plane");
  add_operator(slice);
  slice->add_option("--basis", o.basis, "two vectors spanning the plane, e.g. '1,0,0;0,1,0'")->required();
  slice->add_option("--resolution", o.resolution, "number of angles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(o, out);
    if (*verify) return cmd_verify(o, seed_verify->count() > 0, out);
    if (*suite) return cmd_suite(o, seed_suite->count() > 0, out);
    if (*counter) return cmd_counterexample(o, out);
    if (*slice) return cmd_slice(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kConfigError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  (void)seed_compute;
  return 2;
}

}  // namespace minkval
