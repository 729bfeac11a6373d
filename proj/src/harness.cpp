#include "minkval/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "minkval/errors.hpp"

namespace minkval {

namespace {

nlohmann::json vec_json(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v.coords()) a.push_back(c.get_str());
  return a;
}

Rational config_rational(const nlohmann::json& v) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return parse_rational(v.dump());
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  throw Error(ErrorCode::kConfigError, "expected a rational, got " + v.dump());
}

std::size_t config_count(const nlohmann::json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorCode::kConfigError, std::string(key) + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::optional<Operator> make_for(const OperatorSpec& spec, std::size_t n) {
  try {
    return Operator::make(spec, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFamilyDimensionMismatch) return std::nullopt;
    throw;
  }
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(Verdict& v, const Timer& t) {
  std::sort(v.cases.begin(), v.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  v.seconds = t.seconds();
}

std::string dim_key(std::size_t n) { return "n=" + std::to_string(n); }

// Folds one comparison into a case; keeps the first failure as witness.
bool record(CaseResult& c, const Vector& x, const Scalar& lhs, const Scalar& rhs, double rel, double abs_tol) {
  ++c.checks;
  if (scalars_agree(lhs, rhs, rel, abs_tol)) return true;
  if (c.pass) {
    c.pass = false;
    Witness w;
    w.x = x;
    w.lhs = lhs.str();
    w.rhs = rhs.str();
    w.discrepancy = (lhs - rhs).str();
    c.witness = w;
  }
  return false;
}

// Seeded lattice polytope containing o, full-dimensional.
Polytope random_polytope(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vector> pts{Vector(n)};
    for (std::size_t k = 0; k < 2 * n + 1; ++k) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = coord(rng);
      pts.push_back(v);
    }
    Polytope p = Polytope::hull(pts);
    if (p.is_full_dimensional()) return p;
  }
  throw Error(ErrorCode::kGenerationFailed, "no full-dimensional random polytope");
}

// o in the interior: v0 = -(v1 + ... + vn) / 2.
Polytope random_interior_simplex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < n; ++k) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = coord(rng);
      vs.push_back(v);
    }
    if (determinant(Matrix::from_rows(vs)) == 0) continue;
    Vector sum(n);
    for (const auto& v : vs) sum += v;
    vs.push_back(Rational(-1, 2) * sum);
    return Polytope::hull(vs);
  }
  throw Error(ErrorCode::kGenerationFailed, "no random simplex");
}

bool vanishes_below_full_dim(const OperatorSpec& s) {
  const std::string& f = s.family;
  if (f == "asym_lp_projection" || f == "asym_linf_projection" || f == "moment_body" || f == "moment_body_linf" ||
      f == "contra_linf") {
    return true;
  }
  return f == "contra_lp" && !s.p.is_infinite() && s.p.value() > 1;
}

OperatorSpec spec_of(const std::string& family, Exponent p = Exponent(1),
                     std::map<std::string, Rational> coefficients = {}) {
  OperatorSpec s;
  s.family = family;
  s.p = std::move(p);
  s.coefficients = std::move(coefficients);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"valuation", "equivariance", "homogeneity", "vanishing",
                                              "projection", "polar", "closed_form", "difference",
                                              "limit", "moment", "counterexample", "constraint",
                                              "negative"};
  return names;
}

nlohmann::json SuiteConfig::to_json() const {
  nlohmann::json j;
  j["families"] = nlohmann::json::array();
  for (const auto& f : (families_given ? families : default_families())) j["families"].push_back(f.to_json());
  j["dims"] = dims;
  j["lambdas"] = nlohmann::json::array();
  for (const auto& l : lambdas) j["lambdas"].push_back(l.get_str());
  j["scales"] = nlohmann::json::array();
  for (const auto& s : scales) j["scales"].push_back(s.get_str());
  j["probes"] = probes;
  j["aux_probes"] = aux_probes;
  j["seed"] = seed;
  j["rel_tol"] = rel_tol;
  j["abs_tol"] = abs_tol;
  j["chain_depth"] = chain_depth;
  j["mc_samples"] = mc_samples;
  j["suites"] = std::vector<std::string>(suites.begin(), suites.end());
  return j;
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, "suite config must be a JSON object");
  static const std::set<std::string> known{"families", "dims", "lambdas", "scales", "probes", "aux_probes",
                                           "seed", "rel_tol", "abs_tol", "chain_depth", "mc_samples", "suites"};
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) throw Error(ErrorCode::kConfigError, "unknown config key '" + k + "'");
  }
  SuiteConfig c;
  if (j.contains("families")) {
    if (!j["families"].is_array()) throw Error(ErrorCode::kConfigError, "'families' must be an array");
    c.families_given = true;
    for (const auto& f : j["families"]) {
      try {
        c.families.push_back(OperatorSpec::from_json(f));
      } catch (const Error& e) {
        throw Error(ErrorCode::kConfigError, e.what());
      }
    }
  }
  if (j.contains("dims")) {
    if (!j["dims"].is_array() || j["dims"].empty()) throw Error(ErrorCode::kConfigError, "'dims' must be a nonempty array");
    c.dims.clear();
    for (const auto& d : j["dims"]) {
      const std::size_t n = config_count(d, "dims entry");
      if (n < 2 || n > kMaxAmbientDim) throw Error(ErrorCode::kConfigError, "dims entries must be in 2..5");
      c.dims.push_back(n);
    }
  }
  auto rationals = [&](const char* key, std::vector<Rational>& dst, bool unit_interval) {
    if (!j.contains(key)) return;
    if (!j[key].is_array() || j[key].empty()) {
      throw Error(ErrorCode::kConfigError, std::string("'") + key + "' must be a nonempty array");
    }
    dst.clear();
    for (const auto& v : j[key]) {
      Rational r = config_rational(v);
      if (r <= 0 || (unit_interval && r >= 1)) {
        throw Error(ErrorCode::kConfigError, std::string(key) + " entry out of range: " + r.get_str());
      }
      dst.push_back(r);
    }
  };
  rationals("lambdas", c.lambdas, true);
  rationals("scales", c.scales, false);
  if (j.contains("probes")) c.probes = config_count(j["probes"], "probes");
  if (j.contains("aux_probes")) c.aux_probes = config_count(j["aux_probes"], "aux_probes");
  if (j.contains("chain_depth")) c.chain_depth = config_count(j["chain_depth"], "chain_depth");
  if (j.contains("mc_samples")) c.mc_samples = config_count(j["mc_samples"], "mc_samples");
  if (c.chain_depth > 3) throw Error(ErrorCode::kConfigError, "chain_depth is capped at 3");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw Error(ErrorCode::kConfigError, "seed must be an integer");
    }
    c.seed = j["seed"].get<std::uint64_t>();
  }
  for (const char* key : {"rel_tol", "abs_tol"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number() || j[key].get<double>() < 0) {
      throw Error(ErrorCode::kConfigError, std::string(key) + " must be a nonnegative number");
    }
    (key[0] == 'r' ? c.rel_tol : c.abs_tol) = j[key].get<double>();
  }
  if (j.contains("suites")) {
    if (!j["suites"].is_array()) throw Error(ErrorCode::kConfigError, "'suites' must be an array");
    const auto& names = suite_names();
    for (const auto& s : j["suites"]) {
      if (!s.is_string() || std::find(names.begin(), names.end(), s.get<std::string>()) == names.end()) {
        throw Error(ErrorCode::kConfigError, "unknown suite " + s.dump());
      }
      c.suites.insert(s.get<std::string>());
    }
  }
  return c;
}

std::vector<OperatorSpec> default_families() {
  std::vector<OperatorSpec> f;
  f.push_back(spec_of("identity", Exponent::infinity()));
  f.push_back(spec_of("projection_body"));
  f.push_back(spec_of("pi_o"));
  for (long p : {1, 2, 3}) {
    for (Sign s : {Sign::kPlus, Sign::kMinus}) {
      auto a = spec_of("asym_lp_projection", Exponent(p));
      a.sign = s;
      f.push_back(a);
      auto m = spec_of("moment_body", Exponent(p));
      m.sign = s;
      f.push_back(m);
    }
  }
  f.push_back(spec_of("asym_lp_projection", Exponent(Rational(3, 2))));
  for (Sign s : {Sign::kPlus, Sign::kMinus}) {
    auto a = spec_of("asym_linf_projection", Exponent::infinity());
    a.sign = s;
    f.push_back(a);
    auto m = spec_of("moment_body_linf", Exponent::infinity());
    m.sign = s;
    f.push_back(m);
  }
  f.push_back(spec_of("phi", Exponent(1), {{"a1", 1}, {"a2", 3}, {"b1", 2}, {"b2", 5}}));
  f.push_back(spec_of("phi", Exponent(2), {{"a1", 0}, {"a2", 1}, {"b1", 0}, {"b2", 0}}));
  f.push_back(spec_of("difference_body", Exponent(1), {{"a1", 1}, {"a2", 2}, {"b1", 1}, {"b2", Rational(3, 2)}}));
  f.push_back(spec_of("cov_r3", Exponent(1),
                      {{"c1", 1}, {"c2", 2}, {"a1", 1}, {"a2", 2}, {"b1", 1}, {"b2", Rational(3, 2)}}));
  auto l3 = spec_of("cov_linf", Exponent::infinity());
  l3.a = {1, 2, 3};
  l3.b = {0, 1, 1};
  f.push_back(l3);
  auto l4 = spec_of("cov_linf", Exponent::infinity());
  l4.a = {1, 1, 2, 3};
  l4.b = {0, 0, 1, 2};
  f.push_back(l4);
  auto bad = spec_of("cov_linf", Exponent::infinity());
  bad.a = {1, 3, 2, 4};
  bad.b = {0, 0, 0, 0};
  bad.mode = Mode::kUnchecked;
  bad.expect_pass = false;
  f.push_back(bad);
  f.push_back(spec_of("contra_linf", Exponent::infinity(), {{"c1", 2}, {"c2", 1}}));
  f.push_back(spec_of("contra_lp", Exponent(1), {{"c1", 2}, {"c2", -1}, {"c3", Rational(1, 2)}}));
  f.push_back(spec_of("contra_lp", Exponent(2), {{"c1", 1}, {"c2", 2}}));
  f.push_back(spec_of("cov_lp", Exponent(1), {{"c1", 1}, {"c2", 2}, {"c3", 1}, {"c4", 1}}));
  f.push_back(spec_of("cov_lp", Exponent(2), {{"c1", 1}, {"c2", 1}, {"c3", 1}, {"c4", 1}}));
  f.push_back(spec_of("cov_lp", Exponent(3), {{"c1", 1}, {"c3", 2}}));
  return f;
}

// ---------------------------------------------------------------------------

nlohmann::json Witness::to_json() const {
  nlohmann::json j;
  j["x"] = vec_json(x);
  if (y) j["y"] = vec_json(*y);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["discrepancy"] = discrepancy;
  j["replayed"] = replayed;
  return j;
}

nlohmann::json CaseResult::to_json() const {
  nlohmann::json j;
  j["key"] = key;
  j["pass"] = pass;
  j["expect_pass"] = expect_pass;
  j["checks"] = checks;
  if (witness) j["witness"] = witness->to_json();
  if (!note.empty()) j["note"] = note;
  return j;
}

bool Verdict::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

std::size_t Verdict::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); }));
}

nlohmann::json Verdict::to_json(bool timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ok"] = ok();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) j["cases"].push_back(c.to_json());
  if (timing) j["seconds"] = seconds;
  return j;
}

bool VerdictBundle::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const Verdict& v) { return v.ok(); });
}

const Verdict* VerdictBundle::find(const std::string& suite) const {
  for (const auto& v : suites)
    if (v.suite == suite) return &v;
  return nullptr;
}

nlohmann::json VerdictBundle::to_json(bool timing) const {
  nlohmann::json j;
  j["ok"] = ok();
  j["suites"] = nlohmann::json::array();
  for (const auto& v : suites) j["suites"].push_back(v.to_json(timing));
  return j;
}

// --- generators ----------------------------------------------------------------

std::vector<SimplexSplit> generate_simplex_splits(std::size_t n, std::size_t d, const std::vector<Rational>& lambdas,
                                                  const std::vector<Rational>& scales) {
  if (d < 2 || d > n) throw Error(ErrorCode::kDimensionOutOfRange, "split simplices need 2 <= d <= n");
  std::vector<SimplexSplit> out;
  for (const auto& s : scales) {
    const Polytope t = standard_simplex(d, n, s);
    for (const auto& lam : lambdas) {
      if (lam <= 0 || lam >= 1) throw Error(ErrorCode::kDomainViolation, "lambda must lie in (0, 1)");
      const SplitCase sc = halfspace_split(t, h_lambda_normal(lam, n));
      SimplexSplit sp{{dim_key(n) + " d=" + std::to_string(d) + " s=" + s.get_str() + " lambda=" + lam.get_str(),
                       sc.minus, sc.plus, sc.parent, sc.cut},
                      lam, s, d};
      if (d < n) {
        sp.pieces_match_transforms = sc.minus == apply_linear(t, transform_phi(1, lam, n)) &&
                                     sc.plus == apply_linear(t, transform_phi(2, lam, n));
      } else {
        sp.pieces_match_transforms = sc.minus == apply_linear(t, transform_phi_unscaled(3, lam, n)) &&
                                     sc.plus == apply_linear(t, transform_phi_unscaled(4, lam, n));
      }
      out.push_back(std::move(sp));
    }
  }
  return out;
}

std::vector<Quadruple> generate_union_chain(std::size_t n, std::size_t depth, std::uint64_t seed) {
  if (n < 2 || n > kMaxAmbientDim) throw Error(ErrorCode::kDimensionOutOfRange, "union chain dimension");
  if (depth < 1 || depth > 3) throw Error(ErrorCode::kDomainViolation, "union chain depth must be in 1..3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-2, 2);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < n; ++k) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = coord(rng);
      vs.push_back(v);
    }
    if (determinant(Matrix::from_rows(vs)) == 0) continue;
    vs.push_back(Vector(n));
    Polytope p = Polytope::hull(vs);
    std::vector<Quadruple> quads;
    bool ok = true;
    for (std::size_t level = 2; level <= depth && ok; ++level) {
      std::vector<const FacetData*> through_o;
      for (const auto& f : p.facet_data())
        if (f.contains_origin) through_o.push_back(&f);
      std::shuffle(through_o.begin(), through_o.end(), rng);
      bool glued = false;
      for (const FacetData* f : through_o) {
        std::vector<Vector> fv;
        Vector centroid(n);
        for (auto i : f->vertex_indices) {
          fv.push_back(p.vertices()[i]);
          centroid += p.vertices()[i];
        }
        centroid *= Rational(1, static_cast<long>(fv.size()));
        for (Rational eps(1, 2); eps >= Rational(1, 256); eps /= 2) {
          std::vector<Vector> apex_pts = fv;
          apex_pts.push_back(centroid + eps * f->normal);
          const Polytope pyramid = Polytope::hull(apex_pts);
          if (!union_is_convex(p, pyramid)) continue;
          std::vector<Vector> all = p.vertices();
          all.push_back(apex_pts.back());
          const Polytope join = Polytope::hull(all);
          quads.push_back({dim_key(n) + " chain seed=" + std::to_string(seed) + " level=" + std::to_string(level), p,
                           pyramid, join, Polytope::hull(fv)});
          p = join;
          glued = true;
          break;
        }
        if (glued) break;
      }
      ok = glued;
    }
    if (ok) return quads;
  }
  throw Error(ErrorCode::kGenerationFailed, "union chain: no convex gluing found (seed " + std::to_string(seed) + ")");
}

std::vector<LinearMap> unimodular_maps(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> shear(-2, 2);
  std::vector<LinearMap> out;
  while (out.size() < count) {
    Matrix m = Matrix::identity(n);
    for (int k = 0; k < 3; ++k) {
      const std::size_t i = index(rng), j = index(rng);
      const long c = shear(rng);
      if (i == j || c == 0) continue;
      Matrix e = Matrix::identity(n);
      e(i, j) = c;
      m = e * m;
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix sp(n, n);
    for (std::size_t i = 0; i < n; ++i) sp(i, perm[i]) = (rng() & 1) ? 1 : -1;
    if (determinant(sp) < 0) sp(0, perm[0]) = -sp(0, perm[0]);
    LinearMap phi(sp * m);
    if (phi.is_sl() && !(phi == LinearMap::identity(n))) out.push_back(phi);
  }
  return out;
}

// --- checks ----------------------------------------------------------------------

namespace {

std::pair<Scalar, Scalar> valuation_sides(bool max_form, const SupportEval& fk, const SupportEval& fl,
                                          const SupportEval& fj, const SupportEval& fm, const Vector& x) {
  if (max_form) return {max(fj.power(x), fm.power(x)), max(fk.power(x), fl.power(x))};
  return {fj.power(x) + fm.power(x), fk.power(x) + fl.power(x)};
}

}  // namespace

bool valuation_violation(const Operator& op, const Quadruple& q, const Vector& x, double rel_tol, double abs_tol) {
  const bool max_form = op.exponent().is_infinite();
  auto [lhs, rhs] = valuation_sides(max_form, op.field(q.k), op.field(q.l), op.field(q.join), op.field(q.meet), x);
  return !scalars_agree(lhs, rhs, rel_tol, abs_tol);
}

CaseResult check_valuation_identity(const Operator& op, const Quadruple& q, const std::vector<Vector>& probes,
                                    double rel_tol, double abs_tol) {
  CaseResult c;
  c.key = q.key + " | " + op.spec().label();
  c.expect_pass = op.spec().expect_pass;
  const bool max_form = op.exponent().is_infinite();
  const SupportEval fk = op.field(q.k), fl = op.field(q.l), fj = op.field(q.join), fm = op.field(q.meet);
  for (const auto& x : probes) {
    auto [lhs, rhs] = valuation_sides(max_form, fk, fl, fj, fm, x);
    if (!record(c, x, lhs, rhs, rel_tol, abs_tol)) {
      c.witness->replayed = valuation_violation(op, q, x, rel_tol, abs_tol);
      break;
    }
  }
  return c;
}

CaseResult check_equivariance(const Operator& op, const Polytope& p, const LinearMap& phi,
                              const std::vector<Vector>& probes, double rel_tol, double abs_tol) {
  if (!phi.is_sl()) throw Error(ErrorCode::kNotSpecialLinear, "equivariance needs det = 1, got " + phi.det().get_str());
  CaseResult c;
  c.key = op.spec().label();
  const SupportEval moved = op.field(apply_linear(p, phi));
  const SupportEval base = op.field(p);
  const bool covariant = op.variance() == Variance::kCovariant;
  const LinearMap pull = covariant ? phi.transpose() : phi.inverse();
  for (const auto& x : probes) {
    if (!record(c, x, moved.power(x), base.power(pull.apply(x)), rel_tol, abs_tol)) break;
  }
  return c;
}

CounterexampleResult sublinearity_counterexample(std::uint64_t seed, std::size_t random_pairs) {
  Timer timer;
  CounterexampleResult r;
  r.verdict.suite = "counterexample";
  const std::size_t n = 4;
  std::vector<Vector> pts{-Vector::unit(n, 0)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Vector::unit(n, i));
  const Polytope p = Polytope::hull(pts);
  const Rational a1 = 0, a2 = 1, b1 = 0, b2 = 0;
  const SupportEval h = phi_pair(p, Exponent(1), a1, a2, b1, b2);
  const Vector x{1, 3, 3, 2}, y{1, 3, 2, 3};
  r.at_x = h.power(x);
  r.at_y = h.power(y);
  r.at_sum = h.power(x + y);
  r.margin = r.at_sum - r.at_x - r.at_y;

  auto exact_case = [&](const std::string& key, const Vector& at, const Scalar& got, const Rational& want) {
    CaseResult c;
    c.key = key;
    record(c, at, got, Scalar(want), 0, 0);
    r.verdict.cases.push_back(c);
  };
  // 3a2 + 2(a2 - a1) - (a2 - a1) + b2, and 6a2 + 5(a2 - a1) - 2(a2 - a1) + 2b2
  exact_case("phi sum at (1,3,3,2)", x, r.at_x, 3 * a2 + 2 * (a2 - a1) - (a2 - a1) + b2);
  exact_case("phi sum at (1,3,2,3)", y, r.at_y, 3 * a2 + 2 * (a2 - a1) - (a2 - a1) + b2);
  exact_case("phi sum at (2,6,5,5)", x + y, r.at_sum, 6 * a2 + 5 * (a2 - a1) - 2 * (a2 - a1) + 2 * b2);
  exact_case("violation margin", x + y, r.margin, a2 - a1);

  CaseResult cf;
  cf.key = "closed form agrees on the probe set";
  for (const auto& v : probe_set(n, 2 * random_pairs, seed)) {
    auto [ca, cb] = phi_simplex_closed_form(-Vector::unit(n, 0), 1, v, Exponent(1), a1, a2, b1, b2);
    if (!record(cf, v, h.power(v), ca + cb, 0, 0)) break;
  }
  r.closed_form_agrees = cf.pass;
  r.verdict.cases.push_back(cf);

  const SubadditivityReport rep = subadditivity_check(h, random_pairs, seed);
  r.sampler_finds_violation = !rep.pass && rep.witness && violates_subadditivity(h, rep.witness->first, rep.witness->second);
  CaseResult sc;
  sc.key = "sampler finds a subadditivity violation";
  sc.expect_pass = false;
  sc.pass = rep.pass;
  sc.checks = rep.samples;
  if (rep.witness) {
    Witness w;
    w.x = rep.witness->first;
    w.y = rep.witness->second;
    w.lhs = rep.hxy.str();
    w.rhs = (rep.hx + rep.hy).str();
    w.discrepancy = rep.margin.str();
    w.replayed = violates_subadditivity(h, w.x, *w.y);
    sc.witness = w;
  }
  r.verdict.cases.push_back(sc);

  // The same shape one dimension lower, with admissible coefficients.
  const Polytope p3 = Polytope::hull(std::vector<Vector>{{-1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const SubadditivityReport rep3 = subadditivity_check(difference_body(p3, {0, 1, 0, 1}), random_pairs, seed);
  r.planar_analogue_subadditive = rep3.pass;
  CaseResult c3;
  c3.key = "R^3 analogue with admissible coefficients is subadditive";
  c3.pass = rep3.pass;
  c3.checks = rep3.samples;
  r.verdict.cases.push_back(c3);

  finish(r.verdict, timer);
  return r;
}

// --- suites ----------------------------------------------------------------------

Verdict run_valuation_suite(const SuiteConfig& cfg, const std::vector<OperatorSpec>& families) {
  Timer timer;
  Verdict v;
  v.suite = "valuation";
  for (std::size_t n : cfg.dims) {
    const auto probes = probe_set(n, cfg.probes, cfg.seed + n);
    std::vector<Quadruple> quads;
    CaseResult gen;
    gen.key = dim_key(n) + " generators";
    for (std::size_t d = 2; d <= n; ++d) {
      for (auto& sp : generate_simplex_splits(n, d, cfg.lambdas, cfg.scales)) {
        ++gen.checks;
        if (!sp.pieces_match_transforms || !union_is_convex(sp.quad.k, sp.quad.l)) {
          gen.pass = false;
          gen.note = "bad split " + sp.quad.key;
        }
        quads.push_back(std::move(sp.quad));
      }
    }
    for (auto& q : generate_union_chain(n, cfg.chain_depth, cfg.seed + 100 + n)) {
      ++gen.checks;
      if (!union_is_convex(q.k, q.l)) {
        gen.pass = false;
        gen.note = "non-convex union " + q.key;
      }
      quads.push_back(std::move(q));
    }
    v.cases.push_back(gen);

    for (const auto& spec : families) {
      auto op = make_for(spec, n);
      if (!op) continue;
      CaseResult agg;
      agg.key = dim_key(n) + " | " + spec.label();
      agg.expect_pass = spec.expect_pass;
      for (const auto& q : quads) {
        CaseResult c = check_valuation_identity(*op, q, probes, cfg.rel_tol, cfg.abs_tol);
        agg.checks += c.checks;
        if (!c.pass && agg.pass) {
          agg.pass = false;
          agg.witness = c.witness;
          agg.note = q.key;
        }
        if (!agg.pass) break;
      }
      v.cases.push_back(std::move(agg));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_equivariance_suite(const SuiteConfig& cfg, const std::vector<OperatorSpec>& families) {
  Timer timer;
  Verdict v;
  v.suite = "equivariance";
  for (std::size_t n : cfg.dims) {
    const auto probes = probe_set(n, cfg.aux_probes, cfg.seed + 10 + n);
    auto maps = unimodular_maps(n, 10, cfg.seed + 20 + n);
    for (const Rational& lam : {Rational(1, 4), Rational(1, 2)}) {
      maps.push_back(transform_phi(1, lam, n));
      maps.push_back(transform_phi(2, lam, n));
    }
    const std::vector<Polytope> bodies{standard_simplex(n, n), random_polytope(n, cfg.seed + 30 + n),
                                       standard_simplex(n - 1, n)};
    for (const auto& spec : families) {
      if (!spec.expect_pass) continue;
      auto op = make_for(spec, n);
      if (!op) continue;
      CaseResult agg;
      agg.key = dim_key(n) + " | " + spec.label();
      for (std::size_t b = 0; b < bodies.size() && agg.pass; ++b) {
        for (std::size_t m = 0; m < maps.size() && agg.pass; ++m) {
          CaseResult c = check_equivariance(*op, bodies[b], maps[m], probes, cfg.rel_tol, cfg.abs_tol);
          agg.checks += c.checks;
          if (!c.pass) {
            agg.pass = false;
            agg.witness = c.witness;
            agg.note = "body " + std::to_string(b) + ", map " + std::to_string(m);
          }
        }
      }
      v.cases.push_back(std::move(agg));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_homogeneity_suite(const SuiteConfig& cfg, const std::vector<OperatorSpec>& families) {
  Timer timer;
  Verdict v;
  v.suite = "homogeneity";
  const std::vector<Rational> scales{Rational(1, 2), 2, 3};
  for (std::size_t n : cfg.dims) {
    const auto probes = probe_set(n, cfg.aux_probes, cfg.seed + 40 + n);
    const std::vector<Polytope> bodies{standard_simplex(n, n), random_polytope(n, cfg.seed + 30 + n)};
    for (const auto& spec : families) {
      if (!spec.expect_pass) continue;
      auto op = make_for(spec, n);
      if (!op || !op->degree()) continue;
      CaseResult c;
      c.key = dim_key(n) + " | " + spec.label() + " degree " + op->degree()->get_str();
      double worst = 0.0;
      for (const auto& body : bodies) {
        auto rep = homogeneity_check([&](const Polytope& p) { return op->field(p); }, body, *op->degree(), scales,
                                     probes, 1e-10);
        c.checks += rep.checks;
        worst = std::max(worst, rep.max_deviation);
        if (!rep.pass && c.pass) {
          c.pass = false;
          Witness w;
          w.x = rep.witness ? *rep.witness : Vector(n);
          w.lhs = "measured " + std::to_string(rep.measured_degree);
          w.rhs = "expected " + op->degree()->get_str();
          w.discrepancy = "scale " + rep.witness_scale.get_str();
          c.witness = w;
        }
      }
      c.note = "max |measured - expected| = " + std::to_string(worst);
      v.cases.push_back(std::move(c));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_vanishing_suite(const SuiteConfig& cfg, const std::vector<OperatorSpec>& families) {
  Timer timer;
  Verdict v;
  v.suite = "vanishing";
  for (std::size_t n : cfg.dims) {
    const auto probes = probe_set(n, cfg.aux_probes, cfg.seed + 50 + n);
    std::vector<Polytope> lower{standard_simplex(n - 1, n), standard_simplex(1, n)};
    if (n >= 3) lower.push_back(hat_simplex(n - 2, n));
    lower.push_back(Polytope::hull(std::vector<Vector>{-Vector::unit(n, 0), Vector::unit(n, 0), Vector::unit(n, 1)}));
    for (const auto& spec : families) {
      if (!spec.expect_pass) continue;
      auto op = make_for(spec, n);
      if (!op) continue;
      CaseResult c;
      c.key = dim_key(n) + " | " + spec.label() + " at {o}";
      const OperatorValue at_o = op->apply(Polytope::origin(n));
      for (const auto& x : probes)
        if (!record(c, x, at_o.field.power(x), Scalar(0), cfg.rel_tol, cfg.abs_tol)) break;
      if (at_o.body && !(*at_o.body == Polytope::origin(n))) {
        c.pass = false;
        c.note = "Z{o} is not {o}";
      }
      v.cases.push_back(std::move(c));

      if (!vanishes_below_full_dim(spec)) continue;
      CaseResult d;
      d.key = dim_key(n) + " | " + spec.label() + " below full dimension";
      for (const auto& p : lower) {
        const OperatorValue val = op->apply(p);
        if (val.body && !(*val.body == Polytope::origin(n))) {
          d.pass = false;
          d.note = "nonzero body";
        }
        for (const auto& x : probes)
          if (!record(d, x, val.field.power(x), Scalar(0), cfg.rel_tol, cfg.abs_tol)) break;
      }
      v.cases.push_back(std::move(d));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_projection_suite(const SuiteConfig& cfg, const std::vector<OperatorSpec>& families) {
  Timer timer;
  Verdict v;
  v.suite = "projection";
  for (std::size_t n : cfg.dims) {
    const auto probes = probe_set(n, cfg.aux_probes, cfg.seed + 60 + n);
    Vector diag = Vector::unit(n, 0) + Vector::unit(n, 1);
    std::vector<Polytope> lower{standard_simplex(n - 1, n),
                                Polytope::hull(std::vector<Vector>{-diag, Rational(2) * diag}),
                                Polytope::hull(std::vector<Vector>{Vector(n), diag, Vector::unit(n, n - 1) - Vector::unit(n, 0)})};
    if (n >= 3) lower.push_back(hat_simplex(n - 2, n));
    for (const auto& spec : families) {
      if (!spec.expect_pass) continue;
      auto op = make_for(spec, n);
      if (!op || op->variance() != Variance::kCovariant) continue;
      CaseResult c;
      c.key = dim_key(n) + " | " + spec.label();
      for (const auto& p : lower) {
        const SupportEval h = op->field(p);
        bool ok = true;
        for (const auto& x : probes) {
          ok = record(c, x, h.power(x), h.power(project_vector(x, p)), cfg.rel_tol, cfg.abs_tol);
          if (!ok) break;
        }
        if (!ok) break;
      }
      v.cases.push_back(std::move(c));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_polar_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "polar";
  const std::vector<std::pair<std::string, Polytope>> bodies{
      {"[-1,1]^3", box({-1, -1, -1}, {1, 1, 1})},
      {"[-1,2]x[-1,1]^2", box({-1, -1, -1}, {2, 1, 1})},
      {"random simplex", random_interior_simplex(3, cfg.seed + 70)}};
  const auto probes = probe_set(3, cfg.aux_probes, cfg.seed + 71);
  for (const auto& [name, k] : bodies) {
    const Polytope pi = asym_linf_projection(k, Sign::kPlus);
    CaseResult same;
    same.key = name + " vertex sets";
    same.checks = 1;
    if (!(pi == polar_body(k))) {
      same.pass = false;
      same.note = "asymmetric L_inf projection body differs from the polar body";
    }
    v.cases.push_back(same);
    CaseResult radial;
    radial.key = name + " h * rho = 1";
    const SupportEval h = SupportEval::of(pi);
    for (const auto& x : probes)
      if (!record(radial, x, h.power(x) * Scalar(radial_function(k, x)), Scalar(1), 0, 0)) break;
    v.cases.push_back(radial);
  }
  finish(v, timer);
  return v;
}

namespace {

struct PhiParams {
  Rational a1, a2, b1, b2;
};

const std::vector<PhiParams>& phi_params() {
  static const std::vector<PhiParams> ps{{1, 2, 1, 3}, {Rational(1, 2), 1, 0, 2}, {3, 1, 2, 1}, {0, 1, 0, 0}};
  return ps;
}

}  // namespace

Verdict run_closed_form_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "closed_form";
  struct Shape {
    std::string name;
    std::size_t d, m;
  };
  std::vector<Shape> shapes;
  for (std::size_t d = 1; d <= 4; ++d) shapes.push_back({"T^" + std::to_string(d), d, 0});
  for (std::size_t d = 2; d <= 4; ++d) shapes.push_back({"[-e1,e1..e" + std::to_string(d) + "]", d, 1});
  for (const auto& sh : shapes) {
    Vector v0(sh.d);
    if (sh.m == 1) v0[0] = -1;
    std::vector<Vector> pts{v0, Vector(sh.d)};
    for (std::size_t i = 0; i < sh.d; ++i) pts.push_back(Vector::unit(sh.d, i));
    const Polytope p = Polytope::hull(pts);
    const auto probes = probe_set(sh.d, cfg.probes, cfg.seed + 80 + sh.d);
    for (long q : {1, 2, 3}) {
      CaseResult c;
      c.key = sh.name + " p=" + std::to_string(q);
      for (const auto& pr : phi_params()) {
        const SupportEval fa = phi_valuation(p, Exponent(q), pr.a1, pr.a2);
        const SupportEval fb = phi_valuation(p, Exponent(q), pr.b1, pr.b2, true);
        bool ok = true;
        for (const auto& x : probes) {
          auto [ca, cb] = phi_simplex_closed_form(v0, sh.m, x, Exponent(q), pr.a1, pr.a2, pr.b1, pr.b2);
          ok = record(c, x, fa.power(x), ca, 0, 0) && record(c, x, fb.power(x), cb, 0, 0);
          if (!ok) break;
        }
        if (!ok) break;
      }
      v.cases.push_back(std::move(c));
    }
  }
  CaseResult spot;
  spot.key = "spot values at +-e1";
  for (std::size_t d = 1; d <= 4; ++d) {
    const Polytope t = standard_simplex(d, d);
    for (const auto& pr : phi_params()) {
      const SupportEval h = phi_pair(t, Exponent(2), pr.a1, pr.a2, pr.b1, pr.b2);
      const Vector e1 = Vector::unit(d, 0);
      record(spot, e1, h.power(e1), Scalar(d >= 2 ? pr.a2 : pr.a1), 0, 0);
      record(spot, -e1, h.power(-e1), Scalar(d >= 2 ? pr.b2 : pr.b1), 0, 0);
    }
  }
  v.cases.push_back(spot);
  finish(v, timer);
  return v;
}

Verdict run_difference_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "difference";
  const std::vector<DiffParams> tuples{
      {1, 2, 1, Rational(3, 2)}, {0, 1, 0, 1}, {1, 1, 1, 1}, {Rational(1, 3), 1, 1, 2}, {2, 3, 1, 2}};
  for (std::size_t d = 1; d <= 4; ++d) {
    const Polytope t = standard_simplex(d, d);
    const auto probes = probe_set(d, cfg.probes, cfg.seed + 90 + d);
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const auto& dp = tuples[k];
      CaseResult c;
      c.key = "T^" + std::to_string(d) + " (" + dp.a1.get_str() + "," + dp.a2.get_str() + "," + dp.b1.get_str() + "," +
              dp.b2.get_str() + ")";
      if (!satisfies_constraints(dp)) {
        c.pass = false;
        c.note = "tuple violates the constraints";
      }
      const SupportEval body = SupportEval::of(difference_body_simplex(t, dp));
      const SupportEval phi = phi_pair(t, Exponent(1), dp.a1, dp.a2, dp.b1, dp.b2);
      for (const auto& x : probes)
        if (!record(c, x, body.power(x), phi.power(x), 0, 0)) break;
      v.cases.push_back(std::move(c));
    }
  }
  finish(v, timer);
  return v;
}

Verdict run_limit_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "limit";
  const std::vector<long> ps{1, 2, 4, 8, 16, 32, 64};
  const std::vector<std::pair<std::string, Polytope>> bodies{{"T^3", standard_simplex(3, 3)},
                                                             {"[-1,1]^3", box({-1, -1, -1}, {1, 1, 1})}};
  const auto probes = probe_set(3, cfg.aux_probes, cfg.seed + 100);
  for (const auto& [name, body] : bodies) {
    const SupportEval h_inf = SupportEval::of(asym_linf_projection(body, Sign::kPlus));
    std::vector<SupportEval> hp;
    for (long p : ps) hp.push_back(asym_lp_projection(body, Exponent(p), Sign::kPlus));
    CaseResult close;
    close.key = name + " p=64 within 5%";
    CaseResult mono;
    mono.key = name + " monotone approach";
    for (const auto& x : probes) {
      const double target = h_inf.eval(x).to_double();
      if (target <= 0) continue;
      double prev = std::fabs(hp[0].eval(x).to_double() - target);
      for (std::size_t k = 1; k < ps.size(); ++k) {
        const double gap = std::fabs(hp[k].eval(x).to_double() - target);
        ++mono.checks;
        if (gap > prev + 1e-6 && mono.pass) {
          mono.pass = false;
          mono.witness = Witness{x, std::nullopt, "gap at p=" + std::to_string(ps[k]) + ": " + std::to_string(gap),
                                 "gap at p=" + std::to_string(ps[k - 1]) + ": " + std::to_string(prev),
                                 std::to_string(gap - prev), false};
        }
        prev = gap;
      }
      ++close.checks;
      if (prev > 0.05 * target && close.pass) {
        close.pass = false;
        close.witness = Witness{x, std::nullopt, std::to_string(hp.back().eval(x).to_double()),
                                std::to_string(target), std::to_string(prev), false};
      }
    }
    v.cases.push_back(close);
    v.cases.push_back(mono);
  }
  finish(v, timer);
  return v;
}

Verdict run_moment_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "moment";
  CaseResult exact;
  exact.key = "exact values";
  record(exact, Vector{1, 0}, moment_body(standard_simplex(2, 2), Exponent(1), Sign::kPlus).eval(Vector{1, 0}),
         Scalar(Rational(1, 6)), 0, 0);
  record(exact, Vector{1, 0}, moment_body(box({-1, -1}, {1, 1}), Exponent(1), Sign::kPlus).eval(Vector{1, 0}),
         Scalar(1), 0, 0);
  v.cases.push_back(exact);

  struct Instance {
    std::string name;
    Polytope p;
    Vector x;
    long q;
    Sign sign;
  };
  const std::vector<Instance> instances{
      {"T^3 p=1", standard_simplex(3, 3), Vector{1, 1, 1}, 1, Sign::kPlus},
      {"box p=2", box({-1, -2, 0}, {2, 1, 1}), Vector{1, 2, -1}, 2, Sign::kPlus},
      {"T^4 p=3 minus", standard_simplex(4, 4), Vector{-1, 1, -2, 0}, 3, Sign::kMinus},
      {"random p=2", random_polytope(3, cfg.seed + 110), Vector{2, -1, 1}, 2, Sign::kPlus},
      {"[-1,1]^2 p=1", box({-1, -1}, {1, 1}), Vector{1, 1}, 1, Sign::kPlus}};
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& in = instances[k];
    CaseResult c;
    c.key = "monte carlo " + in.name;
    const double want = moment_body(in.p, Exponent(in.q), in.sign).power(in.x).to_double();
    const auto est = moment_integral_mc(in.p, static_cast<double>(in.q), in.sign, in.x, cfg.mc_samples, cfg.seed + k);
    c.checks = 1;
    const double dev = std::fabs(est.value - want);
    c.note = "estimate " + std::to_string(est.value) + " +- " + std::to_string(est.std_error) + ", exact " +
             std::to_string(want);
    if (!(dev <= 3 * est.std_error)) {
      c.pass = false;
      c.witness = Witness{in.x, std::nullopt, std::to_string(est.value), std::to_string(want),
                          std::to_string(dev / est.std_error) + " standard errors", false};
    }
    v.cases.push_back(std::move(c));
  }
  finish(v, timer);
  return v;
}

namespace {

CaseResult subadditivity_case(const std::string& key, const SupportEval& h, std::size_t pairs, std::uint64_t seed,
                              bool expect_pass) {
  const SubadditivityReport rep = subadditivity_check(h, pairs, seed);
  CaseResult c;
  c.key = key;
  c.expect_pass = expect_pass;
  c.pass = rep.pass;
  c.checks = rep.samples;
  if (rep.witness) {
    Witness w;
    w.x = rep.witness->first;
    w.y = rep.witness->second;
    w.lhs = rep.hxy.str();
    w.rhs = (rep.hx + rep.hy).str();
    w.discrepancy = rep.margin.str();
    w.replayed = violates_subadditivity(h, w.x, *w.y);
    c.witness = w;
  }
  return c;
}

std::string tuple_str(const DiffParams& d) {
  return "(" + d.a1.get_str() + "," + d.a2.get_str() + "," + d.b1.get_str() + "," + d.b2.get_str() + ")";
}

}  // namespace

Verdict run_constraint_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "constraint";
  const std::vector<std::pair<std::string, Polytope>> bodies{
      {"T^3", standard_simplex(3, 3)},
      {"[0,1]^3", box({0, 0, 0}, {1, 1, 1})},
      {"random", random_polytope(3, cfg.seed + 120)}};
  // a2 - a1 = b2 and/or b2 - b1 = a2 exactly
  const std::vector<DiffParams> boundary{{0, 1, 0, 1}, {1, 3, 0, 2}, {2, 3, 0, 3}};
  for (const auto& dp : boundary)
    for (const auto& [name, p] : bodies)
      v.cases.push_back(subadditivity_case("boundary " + tuple_str(dp) + " on " + name, difference_body(p, dp),
                                           cfg.probes, cfg.seed + 121, true));
  const std::vector<DiffParams> beyond{{0, 1, 0, Rational(9, 10)}, {0, Rational(9, 10), 0, 1}};
  for (const auto& dp : beyond)
    v.cases.push_back(subadditivity_case("beyond " + tuple_str(dp) + " on T^3",
                                         difference_body(standard_simplex(3, 3), dp, false), cfg.probes,
                                         cfg.seed + 122, false));
  finish(v, timer);
  return v;
}

Verdict run_negative_suite(const SuiteConfig& cfg) {
  Timer timer;
  Verdict v;
  v.suite = "negative";
  if (std::find(cfg.dims.begin(), cfg.dims.end(), std::size_t{4}) != cfg.dims.end()) {
    OperatorSpec bad = spec_of("cov_linf", Exponent::infinity());
    bad.a = {1, 3, 2, 4};
    bad.b = {0, 0, 0, 0};
    bad.mode = Mode::kUnchecked;
    bad.expect_pass = false;
    const Operator op = Operator::make(bad, 4);
    const auto probes = probe_set(4, cfg.probes, cfg.seed + 4);
    CaseResult agg;
    agg.key = "non-monotone cov_linf on simplex splits";
    agg.expect_pass = false;
    for (std::size_t d = 2; d <= 4 && agg.pass; ++d) {
      for (const auto& sp : generate_simplex_splits(4, d, cfg.lambdas, cfg.scales)) {
        CaseResult c = check_valuation_identity(op, sp.quad, probes, cfg.rel_tol, cfg.abs_tol);
        agg.checks += c.checks;
        if (!c.pass) {
          agg.pass = false;
          agg.witness = c.witness;
          agg.note = sp.quad.key;
          break;
        }
      }
    }
    v.cases.push_back(std::move(agg));
  }
  const DiffParams dp{0, 1, 0, Rational(9, 10)};
  v.cases.push_back(subadditivity_case("D-form with a2 - a1 = b2 + 1/10 on T^3",
                                       difference_body(standard_simplex(3, 3), dp, false), cfg.probes,
                                       cfg.seed + 3, false));
  finish(v, timer);
  return v;
}

VerdictBundle run_suite(const SuiteConfig& cfg) {
  VerdictBundle b;
  const std::vector<OperatorSpec> families = cfg.families_given ? cfg.families : default_families();
  if (families.empty()) return b;
  if (cfg.wants("valuation")) b.suites.push_back(run_valuation_suite(cfg, families));
  if (cfg.wants("equivariance")) b.suites.push_back(run_equivariance_suite(cfg, families));
  if (cfg.wants("homogeneity")) b.suites.push_back(run_homogeneity_suite(cfg, families));
  if (cfg.wants("vanishing")) b.suites.push_back(run_vanishing_suite(cfg, families));
  if (cfg.wants("projection")) b.suites.push_back(run_projection_suite(cfg, families));
  if (cfg.wants("polar")) b.suites.push_back(run_polar_suite(cfg));
  if (cfg.wants("closed_form")) b.suites.push_back(run_closed_form_suite(cfg));
  if (cfg.wants("difference")) b.suites.push_back(run_difference_suite(cfg));
  if (cfg.wants("limit")) b.suites.push_back(run_limit_suite(cfg));
  if (cfg.wants("moment")) b.suites.push_back(run_moment_suite(cfg));
  if (cfg.wants("counterexample")) b.suites.push_back(sublinearity_counterexample(cfg.seed, cfg.probes).verdict);
  if (cfg.wants("constraint")) b.suites.push_back(run_constraint_suite(cfg));
  if (cfg.wants("negative")) b.suites.push_back(run_negative_suite(cfg));
  return b;
}

}  // namespace minkval
