#include "minkval/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "minkval/errors.hpp"

namespace minkval {

namespace {

Rational factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational positive_power(const Rational& t, unsigned long e) {
  if (t <= 0) return e == 0 ? Rational(1) : Rational(0);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), t.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), t.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Weighted sum of fields sharing an exponent (no roots taken).
SupportEval field_sum(std::vector<std::pair<Rational, SupportEval>> terms, const Exponent& p, FieldKind kind,
                      std::string label) {
  const std::size_t n = terms.front().second.dim();
  return SupportEval(n, p, kind,
                     [terms = std::move(terms)](const Vector& x) {
                       Scalar acc(0);
                       for (const auto& [c, f] : terms) {
                         if (c != 0) acc += Scalar(c) * f.power(x);
                       }
                       return acc;
                     },
                     std::move(label));
}

std::vector<Vector> scaled_vertices(const Polytope& p, const Rational& s) {
  std::vector<Vector> out;
  for (const auto& v : p.vertices()) out.push_back(s * v);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SupportEval projection_body(const Polytope& p) {
  auto atoms = p.surface_atoms();
  const std::size_t n = p.ambient_dim();
  if (atoms.empty()) return SupportEval::zero(n, Exponent(1), "Pi");
  return SupportEval(n, Exponent(1), FieldKind::kFacetSum,
                     [atoms](const Vector& x) {
                       Rational s = 0;
                       for (const auto& a : atoms) s += abs(dot(x, a));
                       return Scalar(Rational(s / 2));
                     },
                     "Pi");
}

namespace {

// Area vectors of facets not through o, with h_P(A_i).
std::vector<std::pair<Vector, Rational>> outer_atoms(const Polytope& p) {
  std::vector<std::pair<Vector, Rational>> out;
  if (!p.is_full_dimensional()) return out;
  for (const auto& f : p.facet_data()) {
    if (f.offset > 0) out.emplace_back(f.area_vector, p.support(f.area_vector));
  }
  return out;
}

}  // namespace

SupportEval pi_o(const Polytope& p) {
  auto atoms = p.surface_atoms();
  auto outer = outer_atoms(p);
  const std::size_t n = p.ambient_dim();
  if (atoms.empty()) return SupportEval::zero(n, Exponent(1), "Pi_o");
  return SupportEval(n, Exponent(1), FieldKind::kFacetSum,
                     [atoms, outer](const Vector& x) {
                       Rational s = 0;
                       for (const auto& a : atoms) s += abs(dot(x, a));
                       s /= 2;
                       for (const auto& [a, h] : outer) {
                         Rational t = dot(x, a);
                         if (t > 0) s -= t;
                       }
                       return Scalar(s);
                     },
                     "Pi_o");
}

SupportEval asym_lp_projection(const Polytope& p, const Exponent& q, Sign sign) {
  if (q.is_infinite()) throw Error(ErrorCode::kDomainViolation, "use asym_linf_projection for p = infinity");
  if (q.value() < 1) throw Error(ErrorCode::kDomainViolation, "asymmetric L_p projection body needs p >= 1");
  const std::size_t n = p.ambient_dim();
  const std::string label = std::string("PiHat_") + q.str() + (sign == Sign::kPlus ? "^+" : "^-");
  auto outer = outer_atoms(p);
  if (outer.empty()) return SupportEval::zero(n, q, label);
  // weights h_P(A)^(1-p)
  std::vector<std::pair<Vector, Scalar>> terms;
  const Exponent pm1(Rational(q.value() - 1));
  for (const auto& [a, h] : outer) terms.emplace_back(a, Scalar(1) / pow(Scalar(h), pm1));
  const bool minus = sign == Sign::kMinus;
  return SupportEval(n, q, FieldKind::kFacetSum,
                     [terms, q, minus](const Vector& x) {
                       Scalar s(0);
                       for (const auto& [a, w] : terms) {
                         Rational t = dot(x, a);
                         if (minus) t = -t;
                         if (t > 0) s += w * pow(Scalar(t), q);
                       }
                       return s;
                     },
                     label);
}

Polytope asym_linf_projection(const Polytope& p, Sign sign) {
  const std::size_t n = p.ambient_dim();
  std::vector<Vector> pts{Vector(n)};
  if (p.is_full_dimensional()) {
    for (const auto& f : p.facet_data()) {
      if (f.offset <= 0) continue;
      Vector v = (1 / f.offset) * f.normal;
      pts.push_back(sign == Sign::kPlus ? v : -v);
    }
  }
  return Polytope::hull(pts);
}

Polytope polar_body(const Polytope& k) {
  if (k.origin_position() != OriginPosition::kInterior) {
    throw Error(ErrorCode::kOriginNotInterior, "polar body needs o in the interior");
  }
  const auto& vs = k.vertices();
  const std::size_t n = k.ambient_dim();
  Vector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  std::vector<Vector> pts;
  std::vector<std::size_t> idx(n);
  // every n-subset of vertices whose hyperplanes y . v = 1 meet in one point
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<Vector> rows;
      for (auto i : idx) rows.push_back(vs[i]);
      auto y = solve(Matrix::from_rows(rows), ones);
      if (!y) return;
      for (const auto& v : vs) {
        if (dot(*y, v) > 1) return;
      }
      pts.push_back(*y);
      return;
    }
    for (std::size_t i = start; i < vs.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return Polytope::hull(pts);
}

Rational radial_function(const Polytope& p, const Vector& x) {
  if (x.size() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "radial function argument");
  if (x.is_zero()) throw Error(ErrorCode::kDomainViolation, "radial function at o");
  auto t = p.ray_exit(x);
  if (!t || *t == 0) throw Error(ErrorCode::kRayOutsideBody, "ray through " + x.str() + " meets P only at o");
  return *t;
}

// ---------------------------------------------------------------------------

namespace {

// [t_0, ..., t_m] F for F(t) = t_+^N, nodes sorted ascending; repeated nodes
// use derivatives F^(k)(t)/k! = C(N, k) t_+^(N-k).
Rational divided_difference(const std::vector<Rational>& t, unsigned long big_n) {
  const std::size_t m = t.size();
  std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) d[i][i] = positive_power(t[i], big_n);
  for (std::size_t len = 1; len < m; ++len) {
    for (std::size_t i = 0; i + len < m; ++i) {
      const std::size_t j = i + len;
      if (t[i] == t[j]) {
        d[i][j] = binomial(big_n, len) * positive_power(t[i], big_n - len);
      } else {
        d[i][j] = (d[i + 1][j] - d[i][j - 1]) / (t[j] - t[i]);
      }
    }
  }
  return d[0][m - 1];
}

struct SimplexData {
  std::vector<Vector> verts;
  Rational weight;  // |det| * p! / (p+n)!
};

}  // namespace

SupportEval moment_body(const Polytope& p, const Exponent& q, Sign sign) {
  if (!q.is_integer() || q.value() < 1) {
    throw Error(ErrorCode::kDomainViolation, "exact moment body needs an integer p >= 1; use moment_integral_mc");
  }
  const std::size_t n = p.ambient_dim();
  const std::string label = std::string("M_") + q.str() + (sign == Sign::kPlus ? "^+" : "^-");
  if (!p.is_full_dimensional()) return SupportEval::zero(n, q, label);
  const unsigned long pe = q.as_unsigned();
  const Rational c = factorial(pe) / factorial(pe + n);
  std::vector<SimplexData> simplices;
  for (const auto& s : p.triangulation()) {
    SimplexData sd;
    for (auto i : s) sd.verts.push_back(p.vertices()[i]);
    std::vector<Vector> rows;
    for (std::size_t k = 1; k < sd.verts.size(); ++k) rows.push_back(sd.verts[k] - sd.verts[0]);
    sd.weight = abs(determinant(Matrix::from_rows(rows))) * c;
    simplices.push_back(std::move(sd));
  }
  const bool minus = sign == Sign::kMinus;
  const unsigned long big_n = pe + n;
  return SupportEval(n, q, FieldKind::kIntegral,
                     [simplices, minus, big_n](const Vector& x) {
                       Rational total = 0;
                       std::vector<Rational> t;
                       for (const auto& s : simplices) {
                         t.clear();
                         bool any_positive = false;
                         for (const auto& v : s.verts) {
                           Rational l = dot(x, v);
                           if (minus) l = -l;
                           any_positive = any_positive || l > 0;
                           t.push_back(std::move(l));
                         }
                         if (!any_positive) continue;
                         std::sort(t.begin(), t.end());
                         total += s.weight * divided_difference(t, big_n);
                       }
                       return Scalar(total);
                     },
                     label);
}

Polytope moment_body_linf(const Polytope& p, Sign sign) {
  if (!p.is_full_dimensional()) return Polytope::origin(p.ambient_dim());
  return sign == Sign::kPlus ? p : p.reflected();
}

MonteCarloEstimate moment_integral_mc(const Polytope& p, double q, Sign sign, const Vector& x,
                                      std::size_t samples, std::uint64_t seed) {
  if (q < 1) throw Error(ErrorCode::kDomainViolation, "moment integral needs p >= 1");
  if (samples < 2) throw Error(ErrorCode::kDomainViolation, "need at least two samples");
  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  if (!p.is_full_dimensional()) return est;
  const std::size_t n = p.ambient_dim();
  const double sx = sign == Sign::kPlus ? 1.0 : -1.0;

  std::vector<std::vector<double>> levels;  // x . v per simplex vertex
  std::vector<double> cumulative;
  double vol = 0.0;
  double fact = 1.0;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<double>(k);
  for (const auto& s : p.triangulation()) {
    std::vector<Vector> rows;
    std::vector<double> l;
    for (auto i : s) l.push_back(sx * dot(x, p.vertices()[i]).get_d());
    for (std::size_t k = 1; k < s.size(); ++k) rows.push_back(p.vertices()[s[k]] - p.vertices()[s[0]]);
    vol += Rational(abs(determinant(Matrix::from_rows(rows)))).get_d() / fact;
    cumulative.push_back(vol);
    levels.push_back(std::move(l));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  double mean = 0.0, m2 = 0.0;
  std::vector<double> w(n + 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const double pick = uni(rng) * vol;
    std::size_t si = std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
    if (si >= levels.size()) si = levels.size() - 1;
    double total = 0.0;
    for (auto& wi : w) {
      wi = expo(rng);
      total += wi;
    }
    double level = 0.0;
    for (std::size_t i = 0; i <= n; ++i) level += w[i] / total * levels[si][i];
    const double f = level > 0 ? std::pow(level, q) : 0.0;
    const double delta = f - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (f - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  est.value = vol * mean;
  est.std_error = vol * std::sqrt(var / static_cast<double>(samples));
  return est;
}

// ---------------------------------------------------------------------------

SupportEval phi_valuation(const Polytope& p, const Exponent& q, const Rational& a1, const Rational& a2,
                          bool reflected) {
  const std::size_t n = p.ambient_dim();
  std::string label = "Phi_{" + q.str() + ";" + a1.get_str() + "," + a2.get_str() + "}";
  if (reflected) label += "(-P)";
  const int d = p.dim();
  if (d == 0) return SupportEval::zero(n, q, label);
  const Rational lead = (d % 2 == 1) ? a1 : Rational(2 * a2 - a1);
  std::vector<std::pair<Rational, std::vector<std::size_t>>> faces;
  for (int j = 1; j <= d - 1; ++j) {
    const Rational c = (j % 2 == 0 ? 1 : -1) * (a2 - a1);
    if (c == 0) continue;
    for (const auto& f : p.faces_through_origin(j)) faces.emplace_back(c, f.vertex_indices);
  }
  auto verts = p.vertices();
  return SupportEval(n, q, FieldKind::kFaceLatticeSum,
                     [verts, faces, lead, q, reflected](const Vector& x) {
                       std::vector<Rational> dots;
                       dots.reserve(verts.size());
                       for (const auto& v : verts) dots.push_back(reflected ? Rational(-dot(x, v)) : dot(x, v));
                       const Rational hp = *std::max_element(dots.begin(), dots.end());
                       Scalar acc = Scalar(lead) * pow(Scalar(hp), q);
                       for (const auto& [c, ids] : faces) {
                         Rational hf = dots[ids[0]];
                         for (auto i : ids)
                           if (dots[i] > hf) hf = dots[i];
                         acc += Scalar(c) * pow(Scalar(hf), q);
                       }
                       return acc;
                     },
                     label);
}

SupportEval phi_pair(const Polytope& p, const Exponent& q, const Rational& a1, const Rational& a2,
                     const Rational& b1, const Rational& b2) {
  auto fa = phi_valuation(p, q, a1, a2);
  auto fb = phi_valuation(p, q, b1, b2, true);
  return field_sum({{1, fa}, {1, fb}}, q, FieldKind::kFaceLatticeSum, fa.label() + " + " + fb.label());
}

std::pair<Scalar, Scalar> phi_simplex_closed_form(const Vector& v0, std::size_t m, const Vector& x,
                                                  const Exponent& q, const Rational& a1, const Rational& a2,
                                                  const Rational& b1, const Rational& b2) {
  const std::size_t d = x.size();
  if (v0.size() != d) throw Error(ErrorCode::kDimensionMismatch, "v0 and x");
  if (m >= d) throw Error(ErrorCode::kOriginConditionViolated, "closed form needs m < d");
  for (std::size_t k = 0; k < d; ++k) {
    const bool ok = k < m ? v0[k] < 0 : v0[k] == 0;
    if (!ok) throw Error(ErrorCode::kOriginConditionViolated, "o is not in relint [v0, e1..em] for v0 = " + v0.str());
  }
  Rational al1 = dot(v0, x), al2 = al1;
  for (std::size_t k = 0; k < m; ++k) {
    al1 = std::max(al1, x[k]);
    al2 = std::min(al2, x[k]);
  }
  Rational be1 = x[m], be2 = x[m];
  for (std::size_t k = m; k < d; ++k) {
    be1 = std::max(be1, x[k]);
    be2 = std::min(be2, x[k]);
  }
  auto sp = [&q](const Rational& v) { return signed_power(Scalar(v), q); };
  const Scalar A1 = sp(al1), A2 = sp(al2), B1 = sp(be1), B2 = sp(be2);
  const Scalar sa(Rational(a2 - a1)), sb(Rational(b2 - b1));
  const Scalar sgn_m = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
  const Scalar a_part = Scalar(a2) * max(A1, B1) - sgn_m * sa * max(A1, B2) + sgn_m * sa * A1;
  const Scalar b_part = Scalar(b2) * max(-A2, -B2) - sgn_m * sb * max(-A2, -B1) + sgn_m * sb * (-A2);
  return {a_part, b_part};
}

bool satisfies_constraints(const DiffParams& d) {
  return d.a1 >= 0 && d.a2 >= 0 && d.b1 >= 0 && d.b2 >= 0 && d.a1 <= d.a2 && d.b1 <= d.b2 &&
         d.a2 - d.a1 <= d.b2 && d.b2 - d.b1 <= d.a2;
}

SupportEval difference_body(const Polytope& p, const DiffParams& d, bool checked) {
  if (p.ambient_dim() != 3) throw Error(ErrorCode::kFamilyDimensionMismatch, "difference body form needs n = 3");
  if (checked && !satisfies_constraints(d)) {
    throw Error(ErrorCode::kConstraintViolation, "difference body coefficients violate the constraints");
  }
  const int dim = p.dim();
  if (dim == 0) return SupportEval::zero(3, Exponent(1), "D");
  auto verts = p.vertices();
  std::vector<std::vector<std::size_t>> edges, twofaces;
  for (const auto& f : p.faces_through_origin(1)) edges.push_back(f.vertex_indices);
  for (const auto& f : p.faces_through_origin(2)) twofaces.push_back(f.vertex_indices);
  Rational lead_a = d.a1, lead_b = d.b1;
  if (dim == 2) {
    lead_a = 2 * d.a2 - d.a1;
    lead_b = 2 * d.b2 - d.b1;
  }
  const Rational da = d.a2 - d.a1, db = d.b2 - d.b1;
  return SupportEval(3, Exponent(1), FieldKind::kFaceLatticeSum,
                     [=](const Vector& x) {
                       std::vector<Rational> up, down;  // x . v and -x . v
                       for (const auto& v : verts) {
                         up.push_back(dot(x, v));
                         down.push_back(-up.back());
                       }
                       auto hmax = [](const std::vector<Rational>& vals, const std::vector<std::size_t>& ids) {
                         Rational m = vals[ids[0]];
                         for (auto i : ids)
                           if (vals[i] > m) m = vals[i];
                         return m;
                       };
                       Rational s = lead_a * *std::max_element(up.begin(), up.end()) +
                                    lead_b * *std::max_element(down.begin(), down.end());
                       if (dim >= 2) {
                         for (const auto& e : edges) s -= da * hmax(up, e) + db * hmax(down, e);
                       }
                       if (dim == 3) {
                         for (const auto& f : twofaces) s += da * hmax(up, f) + db * hmax(down, f);
                       }
                       return Scalar(s);
                     },
                     "D");
}

Polytope difference_body_simplex(const Polytope& t, const DiffParams& d, bool checked) {
  if (checked && !satisfies_constraints(d)) {
    throw Error(ErrorCode::kConstraintViolation, "difference body coefficients violate the constraints");
  }
  const auto& vs = t.vertices();
  const int dim = t.dim();
  const bool has_origin = std::any_of(vs.begin(), vs.end(), [](const Vector& v) { return v.is_zero(); });
  if (dim < 1 || vs.size() != static_cast<std::size_t>(dim) + 1 || !has_origin) {
    throw Error(ErrorCode::kDomainViolation, "difference body vertex form needs a simplex with o as a vertex");
  }
  std::vector<Vector> v;
  for (const auto& x : vs)
    if (!x.is_zero()) v.push_back(x);
  std::vector<Vector> pts;
  if (dim == 1) {
    pts = {Rational(-d.b1) * v[0], d.a1 * v[0]};
  } else {
    const Rational da = d.a2 - d.a1, db = d.b2 - d.b1;
    for (const auto& vi : v)
      for (const auto& vj : v) {
        pts.push_back(d.a2 * vi - d.b2 * vj);
        pts.push_back(d.a2 * vi - da * vj);
        pts.push_back(db * vi - d.b2 * vj);
      }
  }
  return Polytope::hull(pts);
}

// ---------------------------------------------------------------------------

std::string to_string(Mode m) {
  switch (m) {
    case Mode::kExact: return "exact";
    case Mode::kFloat: return "float";
    case Mode::kUnchecked: return "unchecked";
  }
  return "exact";
}

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::kExact;
  if (s == "float") return Mode::kFloat;
  if (s == "unchecked") return Mode::kUnchecked;
  throw Error(ErrorCode::kParseError, "unknown mode '" + s + "'");
}

Rational OperatorSpec::coef(const std::string& key, const Rational& fallback) const {
  auto it = coefficients.find(key);
  return it == coefficients.end() ? fallback : it->second;
}

std::string OperatorSpec::label() const {
  if (!name.empty()) return name;
  std::string s = family + "[p=" + p.str();
  if (sign == Sign::kMinus) s += ",-";
  for (const auto& [k, v] : coefficients) s += "," + k + "=" + v.get_str();
  auto vec = [](const std::vector<Rational>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].get_str();
    return out + ")";
  };
  if (!a.empty()) s += ",a=" + vec(a);
  if (!b.empty()) s += ",b=" + vec(b);
  if (mode == Mode::kUnchecked) s += ",unchecked";
  return s + "]";
}

nlohmann::json OperatorSpec::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["p"] = p.str();
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [k, v] : coefficients) c[k] = v.get_str();
  j["coefficients"] = c;
  if (!a.empty()) {
    j["a"] = nlohmann::json::array();
    for (const auto& v : a) j["a"].push_back(v.get_str());
  }
  if (!b.empty()) {
    j["b"] = nlohmann::json::array();
    for (const auto& v : b) j["b"].push_back(v.get_str());
  }
  j["sign"] = sign == Sign::kPlus ? "+" : "-";
  j["mode"] = to_string(mode);
  j["expect"] = expect_pass ? "pass" : "fail";
  if (!name.empty()) j["name"] = name;
  return j;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) return parse_rational(v.dump());
  throw Error(ErrorCode::kParseError, "expected a rational, got " + v.dump());
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "identity",          "projection_body", "pi_o",      "asym_lp_projection", "asym_linf_projection",
      "moment_body",       "moment_body_linf", "phi",      "difference_body",    "contra_lp",
      "contra_linf",       "cov_linf",        "cov_lp",    "cov_r3"};
  return names;
}

OperatorSpec OperatorSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::kParseError, "operator spec needs a string 'family'");
  }
  OperatorSpec s;
  s.family = j["family"].get<std::string>();
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), s.family) == names.end()) {
    throw Error(ErrorCode::kParseError, "unknown operator family '" + s.family + "'");
  }
  if (!j.contains("p") && (s.family.find("linf") != std::string::npos || s.family == "identity")) s.p = Exponent::infinity();
  if (j.contains("p")) {
    const auto& p = j["p"];
    if (p.is_string()) {
      s.p = Exponent::parse(p.get<std::string>());
    } else {
      s.p = Exponent(json_rational(p));
    }
  }
  if (j.contains("coefficients")) {
    if (!j["coefficients"].is_object()) throw Error(ErrorCode::kParseError, "'coefficients' must be an object");
    for (const auto& [k, v] : j["coefficients"].items()) s.coefficients[k] = json_rational(v);
  }
  for (const char* key : {"a", "b"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw Error(ErrorCode::kParseError, std::string("'") + key + "' must be an array");
    auto& dst = key[0] == 'a' ? s.a : s.b;
    for (const auto& v : j[key]) dst.push_back(json_rational(v));
  }
  if (j.contains("sign")) {
    const auto sg = j["sign"].get<std::string>();
    if (sg == "+" || sg == "plus") s.sign = Sign::kPlus;
    else if (sg == "-" || sg == "minus") s.sign = Sign::kMinus;
    else throw Error(ErrorCode::kParseError, "sign must be + or -");
  }
  if (j.contains("mode")) s.mode = parse_mode(j["mode"].get<std::string>());
  if (j.contains("expect")) {
    const auto e = j["expect"].get<std::string>();
    if (e != "pass" && e != "fail") throw Error(ErrorCode::kParseError, "expect must be pass or fail");
    s.expect_pass = e == "pass";
  }
  if (j.contains("name")) s.name = j["name"].get<std::string>();
  return s;
}

// ---------------------------------------------------------------------------

Operator::Operator(OperatorSpec spec, std::size_t n) : spec_(std::move(spec)), n_(n) {}

Operator Operator::make(const OperatorSpec& spec, std::size_t n) {
  Operator op(spec, n);
  const bool checked = spec.mode != Mode::kUnchecked;
  const std::string& f = spec.family;
  const Rational nn(static_cast<long>(n));
  auto require = [&](bool cond, const std::string& what) {
    if (checked && !cond) throw Error(ErrorCode::kConstraintViolation, spec.label() + ": " + what);
  };
  auto finite_p = [&]() {
    if (spec.p.is_infinite() || spec.p.value() < 1) {
      throw Error(ErrorCode::kDomainViolation, spec.label() + ": needs finite p >= 1");
    }
  };
  auto nonneg = [&](std::initializer_list<const char*> keys) {
    for (auto k : keys) require(spec.coef(k) >= 0, std::string(k) + " must be nonnegative");
  };

  if (f == "identity") {
    op.exponent_ = Exponent::infinity();
    op.degree_ = Rational(1);
  } else if (f == "projection_body" || f == "pi_o") {
    op.variance_ = Variance::kContravariant;
    op.degree_ = nn - 1;
  } else if (f == "asym_lp_projection") {
    finite_p();
    op.variance_ = Variance::kContravariant;
    op.exponent_ = spec.p;
    op.degree_ = nn / spec.p.value() - 1;
  } else if (f == "asym_linf_projection") {
    op.variance_ = Variance::kContravariant;
    op.exponent_ = Exponent::infinity();
    op.degree_ = Rational(-1);
  } else if (f == "moment_body") {
    finite_p();
    if (!spec.p.is_integer()) throw Error(ErrorCode::kDomainViolation, spec.label() + ": exact moment body needs integer p");
    op.exponent_ = spec.p;
    op.degree_ = nn / spec.p.value() + 1;
  } else if (f == "moment_body_linf") {
    op.exponent_ = Exponent::infinity();
    op.degree_ = Rational(1);
  } else if (f == "phi") {
    finite_p();
    op.exponent_ = spec.p;
    op.degree_ = Rational(1);
  } else if (f == "difference_body") {
    if (n != 3) throw Error(ErrorCode::kFamilyDimensionMismatch, spec.label() + ": needs n = 3");
    require(satisfies_constraints({spec.coef("a1"), spec.coef("a2"), spec.coef("b1"), spec.coef("b2")}),
            "coefficients violate a1 <= a2, b1 <= b2, a2 - a1 <= b2, b2 - b1 <= a2");
    op.degree_ = Rational(1);
  } else if (f == "contra_lp") {
    finite_p();
    op.variance_ = Variance::kContravariant;
    op.exponent_ = spec.p;
    if (spec.p.value() == 1) {
      require(spec.coef("c1") >= 0, "c1 must be nonnegative");
      require(spec.coef("c1") + spec.coef("c2") + spec.coef("c3") >= 0, "c1 + c2 + c3 must be nonnegative");
      op.degree_ = nn - 1;
    } else {
      nonneg({"c1", "c2"});
      op.degree_ = nn / spec.p.value() - 1;
    }
  } else if (f == "contra_linf") {
    nonneg({"c1", "c2"});
    op.variance_ = Variance::kContravariant;
    op.exponent_ = Exponent::infinity();
    op.degree_ = Rational(-1);
  } else if (f == "cov_linf") {
    if (spec.a.size() != n || spec.b.size() != n) {
      throw Error(ErrorCode::kFamilyDimensionMismatch, spec.label() + ": a and b need n entries");
    }
    for (std::size_t i = 0; i < n; ++i) {
      require(spec.a[i] >= 0 && spec.b[i] >= 0, "a and b must be nonnegative");
      if (i > 0) require(spec.a[i - 1] <= spec.a[i] && spec.b[i - 1] <= spec.b[i], "a and b must be nondecreasing");
    }
    op.exponent_ = Exponent::infinity();
    op.degree_ = Rational(1);
  } else if (f == "cov_lp") {
    finite_p();
    nonneg({"c1", "c2", "c3", "c4"});
    if (spec.p.value() == 1 && n < 4) {
      throw Error(ErrorCode::kFamilyDimensionMismatch, spec.label() + ": the p = 1 family needs n >= 4");
    }
    op.exponent_ = spec.p;
    const bool moments = spec.coef("c1") != 0 || spec.coef("c2") != 0;
    const bool bodies = spec.coef("c3") != 0 || spec.coef("c4") != 0;
    if (!moments) op.degree_ = Rational(1);
    else if (!bodies) op.degree_ = nn / spec.p.value() + 1;
  } else if (f == "cov_r3") {
    if (n != 3) throw Error(ErrorCode::kFamilyDimensionMismatch, spec.label() + ": needs n = 3");
    nonneg({"c1", "c2"});
    require(satisfies_constraints({spec.coef("a1"), spec.coef("a2"), spec.coef("b1"), spec.coef("b2")}),
            "coefficients violate a1 <= a2, b1 <= b2, a2 - a1 <= b2, b2 - b1 <= a2");
    const bool moments = spec.coef("c1") != 0 || spec.coef("c2") != 0;
    const bool diff = spec.coef("a1") != 0 || spec.coef("a2") != 0 || spec.coef("b1") != 0 || spec.coef("b2") != 0;
    if (!moments) op.degree_ = Rational(1);
    else if (!diff) op.degree_ = nn + 1;
  } else {
    throw Error(ErrorCode::kDomainViolation, "unknown operator family '" + f + "'");
  }
  return op;
}

OperatorValue Operator::apply(const Polytope& p) const {
  if (p.ambient_dim() != n_) throw Error(ErrorCode::kDimensionMismatch, spec_.label() + ": polytope dimension");
  OperatorValue v = apply_exact(p);
  if (spec_.mode == Mode::kFloat) {
    const SupportEval f = v.field;
    v.field = SupportEval(f.dim(), f.exponent(), f.kind(),
                          [f](const Vector& x) { return Scalar::from_double(f.power(x).to_double()); }, f.label());
  }
  return v;
}

OperatorValue Operator::apply_exact(const Polytope& p) const {
  const std::string& f = spec_.family;
  const Sign sign = spec_.sign;
  const Exponent& q = spec_.p;
  const bool checked = spec_.mode != Mode::kUnchecked;
  auto body = [](Polytope b, std::string label) {
    return OperatorValue{SupportEval::of(b, std::move(label)), b};
  };

  if (f == "identity") return body(p, "id");
  if (f == "projection_body") return {projection_body(p), std::nullopt};
  if (f == "pi_o") return {pi_o(p), std::nullopt};
  if (f == "asym_lp_projection") return {asym_lp_projection(p, q, sign), std::nullopt};
  if (f == "asym_linf_projection") return body(asym_linf_projection(p, sign), spec_.label());
  if (f == "moment_body") return {moment_body(p, q, sign), std::nullopt};
  if (f == "moment_body_linf") return body(moment_body_linf(p, sign), spec_.label());
  if (f == "phi") {
    return {phi_pair(p, q, spec_.coef("a1"), spec_.coef("a2"), spec_.coef("b1"), spec_.coef("b2")), std::nullopt};
  }
  const DiffParams dp{spec_.coef("a1"), spec_.coef("a2"), spec_.coef("b1"), spec_.coef("b2")};
  if (f == "difference_body") return {difference_body(p, dp, checked), std::nullopt};
  if (f == "contra_lp") {
    if (q.value() == 1) {
      const Polytope m = p.reflected();
      return {field_sum({{spec_.coef("c1"), projection_body(p)}, {spec_.coef("c2"), pi_o(p)},
                         {spec_.coef("c3"), pi_o(m)}},
                        q, FieldKind::kCombination, spec_.label()),
              std::nullopt};
    }
    return {lp_sum({{spec_.coef("c1"), asym_lp_projection(p, q, Sign::kPlus)},
                    {spec_.coef("c2"), asym_lp_projection(p, q, Sign::kMinus)}},
                   q, spec_.label()),
            std::nullopt};
  }
  if (f == "contra_linf") {
    const Polytope plus = asym_linf_projection(p, Sign::kPlus);
    auto pts = scaled_vertices(plus, spec_.coef("c1"));
    for (auto& v : scaled_vertices(plus, Rational(-spec_.coef("c2")))) pts.push_back(std::move(v));
    return body(Polytope::hull(pts), spec_.label());
  }
  if (f == "cov_linf") {
    const int d = p.dim();
    if (d == 0) return body(Polytope::origin(n_), spec_.label());
    const std::size_t k = static_cast<std::size_t>(d) - 1;
    auto pts = scaled_vertices(p, spec_.a[k]);
    for (auto& v : scaled_vertices(p, Rational(-spec_.b[k]))) pts.push_back(std::move(v));
    return body(Polytope::hull(pts), spec_.label());
  }
  if (f == "cov_lp") {
    std::vector<std::pair<Rational, SupportEval>> terms;
    auto add = [&](const char* key, auto make) {
      if (spec_.coef(key) != 0) terms.emplace_back(spec_.coef(key), make());
    };
    add("c1", [&] { return moment_body(p, q, Sign::kPlus); });
    add("c2", [&] { return moment_body(p, q, Sign::kMinus); });
    add("c3", [&] { return SupportEval::of(p, "h_P"); });
    add("c4", [&] { return SupportEval::of(p.reflected(), "h_-P"); });
    if (terms.empty()) return {SupportEval::zero(n_, q, spec_.label()), std::nullopt};
    return {lp_sum(terms, q, spec_.label()), std::nullopt};
  }
  if (f == "cov_r3") {
    std::vector<std::pair<Rational, SupportEval>> terms{{1, difference_body(p, dp, checked)}};
    if (spec_.coef("c1") != 0) terms.emplace_back(spec_.coef("c1"), moment_body(p, Exponent(1), Sign::kPlus));
    if (spec_.coef("c2") != 0) terms.emplace_back(spec_.coef("c2"), moment_body(p, Exponent(1), Sign::kMinus));
    return {field_sum(terms, Exponent(1), FieldKind::kCombination, spec_.label()), std::nullopt};
  }
  throw Error(ErrorCode::kDomainViolation, "unknown operator family '" + f + "'");
}

}  // namespace minkval
