#include "minkval/support.hpp"

#include <cmath>
#include <random>
#include <set>

#include "minkval/errors.hpp"

namespace minkval {

SupportEval::SupportEval(std::size_t n, Exponent p, FieldKind kind, Fn power, std::string label)
    : n_(n), p_(std::move(p)), kind_(kind), fn_(std::move(power)), label_(std::move(label)) {}

SupportEval SupportEval::of(const Polytope& p, std::string label) {
  auto verts = p.vertices();
  return SupportEval(p.ambient_dim(), Exponent(1), FieldKind::kPolytope,
                     [verts](const Vector& x) {
                       Rational best = dot(x, verts[0]);
                       for (std::size_t i = 1; i < verts.size(); ++i) {
                         Rational v = dot(x, verts[i]);
                         if (v > best) best = v;
                       }
                       return Scalar(best);
                     },
                     std::move(label));
}

SupportEval SupportEval::zero(std::size_t n, Exponent p, std::string label) {
  return SupportEval(n, std::move(p), FieldKind::kCombination, [](const Vector&) { return Scalar(0); },
                     std::move(label));
}

Scalar SupportEval::power(const Vector& x) const {
  if (x.size() != n_) throw Error(ErrorCode::kDimensionMismatch, label_ + ": probe of wrong dimension");
  return fn_(x);
}

Scalar SupportEval::eval(const Vector& x) const { return root(power(x), p_); }

// ---------------------------------------------------------------------------

SupportEval lp_sum(const std::vector<std::pair<Rational, SupportEval>>& terms, const Exponent& p,
                   std::string label) {
  if (terms.empty()) throw Error(ErrorCode::kDomainViolation, "empty L_p combination");
  const std::size_t n = terms[0].second.dim();
  for (const auto& [c, h] : terms) {
    if (h.dim() != n) throw Error(ErrorCode::kDimensionMismatch, "L_p combination of fields on different spaces");
    if (c < 0) throw Error(ErrorCode::kNegativeInput, "negative L_p weight");
  }
  // Weights c^p, precomputed (exact for integer p).
  std::vector<std::pair<Scalar, SupportEval>> weighted;
  for (const auto& [c, h] : terms) {
    weighted.emplace_back(p.is_infinite() ? Scalar(c) : pow(Scalar(c), p), h);
  }
  return SupportEval(n, p, FieldKind::kCombination,
                     [weighted, p](const Vector& x) {
                       Scalar acc(0);
                       bool first = true;
                       for (const auto& [w, h] : weighted) {
                         if (w.sign() == 0) continue;
                         Scalar v;
                         if (h.exponent() == p) {
                           v = h.power(x);
                           if (v.sign() < 0) throw Error(ErrorCode::kNegativeInput, h.label() + " is negative");
                         } else {
                           v = h.eval(x);
                           if (v.sign() < 0) throw Error(ErrorCode::kNegativeInput, h.label() + " is negative");
                           if (!p.is_infinite()) v = pow(v, p);
                         }
                         Scalar term = w * v;
                         if (p.is_infinite()) {
                           acc = first ? term : max(acc, term);
                         } else {
                           acc += term;
                         }
                         first = false;
                       }
                       return acc;
                     },
                     std::move(label));
}

SupportEval lp_combine(const SupportEval& h1, const SupportEval& h2, const Exponent& p, const Rational& c1,
                       const Rational& c2) {
  return lp_sum({{c1, h1}, {c2, h2}}, p, "(" + h1.label() + " +_" + p.str() + " " + h2.label() + ")");
}

// ---------------------------------------------------------------------------

std::vector<Vector> random_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Vector> out;
  while (out.size() < count) {
    std::vector<double> u(n);
    double norm = 0;
    for (auto& c : u) {
      c = gauss(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(std::lround(1024.0 * u[i] / norm));
    if (v.is_zero()) continue;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> probe_set(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Vector> out;
  std::set<Vector> seen;
  auto add = [&](Vector v) {
    if (!v.is_zero() && seen.insert(v).second) out.push_back(std::move(v));
  };
  if (n <= 4) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Vector v(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) v[i] = static_cast<long>(c % 3) - 1;
      add(std::move(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      add(Vector::unit(n, i) + Vector::unit(n, j));
      add(Vector::unit(n, i) - Vector::unit(n, j));
      add(Vector::unit(n, j) - Vector::unit(n, i));
      add(-(Vector::unit(n, i) + Vector::unit(n, j)));
    }
  if (n == 4) {
    add(Vector{1, 3, 3, 2});
    add(Vector{1, 3, 2, 3});
    add(Vector{2, 6, 5, 5});
  }
  if (out.size() < count) {
    for (auto& v : random_directions(n, count - out.size(), seed)) {
      out.push_back(std::move(v));  // duplicates are harmless here
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json SubadditivityReport::to_json() const {
  nlohmann::json j;
  j["check"] = "subadditivity";
  j["params"] = {{"field", label}};
  j["pass"] = pass;
  if (witness) {
    auto vec = [](const Vector& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& c : v.coords()) a.push_back(c.get_str());
      return a;
    };
    j["witness"] = {{"x", vec(witness->first)},
                    {"y", vec(witness->second)},
                    {"h_x", hx.str()},
                    {"h_y", hy.str()},
                    {"h_x_plus_y", hxy.str()},
                    {"margin", margin.str()}};
  }
  j["seed"] = seed;
  j["samples"] = samples;
  j["tol"] = tol;
  return j;
}

namespace {

bool exceeds(const Scalar& excess, double tol) {
  if (excess.is_exact()) return excess.sign() > 0;
  return excess.to_double() > tol;
}

}  // namespace

bool violates_subadditivity(const SupportEval& h, const Vector& x, const Vector& y, double tol) {
  const Scalar excess = h.eval(x + y) - h.eval(x) - h.eval(y);
  if (excess.is_exact()) return excess.sign() > 0;
  const double scale = std::max({1.0, std::fabs(h.eval(x).to_double()), std::fabs(h.eval(y).to_double())});
  return excess.to_double() > tol * scale;
}

SubadditivityReport subadditivity_check(const SupportEval& h, std::size_t random_pairs, std::uint64_t seed,
                                        double tol) {
  SubadditivityReport rep;
  rep.label = h.label();
  rep.seed = seed;
  rep.tol = tol;
  const std::size_t n = h.dim();

  auto fixed = probe_set(n, 0, seed);
  std::vector<Scalar> values;
  values.reserve(fixed.size());
  for (const auto& v : fixed) values.push_back(h.eval(v));

  auto consider = [&](const Vector& x, const Vector& y, const Scalar& hx, const Scalar& hy) {
    ++rep.samples;
    const Scalar hxy = h.eval(x + y);
    const Scalar excess = hxy - hx - hy;
    const double scale = std::max({1.0, std::fabs(hx.to_double()), std::fabs(hy.to_double())});
    if (!exceeds(excess, tol * scale)) return;
    if (rep.pass || excess > rep.margin) {
      rep.pass = false;
      rep.witness = std::make_pair(x, y);
      rep.hx = hx;
      rep.hy = hy;
      rep.hxy = hxy;
      rep.margin = excess;
    }
  };

  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j = i; j < fixed.size(); ++j) consider(fixed[i], fixed[j], values[i], values[j]);

  auto randoms = random_directions(n, 2 * random_pairs, seed);
  for (std::size_t k = 0; k + 1 < randoms.size(); k += 2) {
    consider(randoms[k], randoms[k + 1], h.eval(randoms[k]), h.eval(randoms[k + 1]));
  }
  return rep;
}

// ---------------------------------------------------------------------------

nlohmann::json HomogeneityReport::to_json() const {
  nlohmann::json j;
  j["check"] = "homogeneity";
  j["pass"] = pass;
  j["expected_degree"] = expected_degree.get_str();
  j["measured_degree"] = measured_degree;
  j["max_deviation"] = max_deviation;
  j["exact"] = exact;
  j["checks"] = checks;
  if (witness) j["witness"] = {{"x", witness->str()}, {"scale", witness_scale.get_str()}};
  return j;
}

bool scalars_agree(const Scalar& a, const Scalar& b, double rel_tol, double abs_floor) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  const double x = a.to_double(), y = b.to_double();
  return std::fabs(x - y) <= std::max(abs_floor, rel_tol * std::max(std::fabs(x), std::fabs(y)));
}

namespace {

Rational int_power(const Rational& s, long k) {
  Rational r = 1;
  const Rational base = k >= 0 ? s : Rational(1 / s);
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

}  // namespace

HomogeneityReport homogeneity_check(const std::function<SupportEval(const Polytope&)>& op, const Polytope& p,
                                    const Rational& q, const std::vector<Rational>& scales,
                                    const std::vector<Vector>& probes, double tol) {
  HomogeneityReport rep;
  rep.expected_degree = q;
  rep.exact = true;
  const SupportEval base = op(p);
  const Exponent& e = base.exponent();
  const Rational field_degree = e.is_infinite() ? q : Rational(q * e.value());
  const double pd = e.is_infinite() ? 1.0 : e.to_double();
  std::vector<Scalar> base_values;
  for (const auto& x : probes) base_values.push_back(base.power(x));

  rep.measured_degree = q.get_d();
  for (const auto& s : scales) {
    const SupportEval scaled = op(p.scaled(s));
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Scalar lhs = scaled.power(probes[k]);
      const Scalar& b = base_values[k];
      bool ok;
      if (field_degree.get_den() == 1 && lhs.is_exact() && b.is_exact()) {
        ok = lhs.rational() == int_power(s, field_degree.get_num().get_si()) * b.rational();
      } else {
        rep.exact = false;
        const double expected = std::pow(s.get_d(), field_degree.get_d()) * b.to_double();
        ok = scalars_agree(lhs, Scalar::from_double(expected), tol);
      }
      ++rep.checks;
      if (s != 1 && b.to_double() > 0 && lhs.to_double() > 0) {
        const double measured = std::log(lhs.to_double() / b.to_double()) / (pd * std::log(s.get_d()));
        const double dev = std::fabs(measured - q.get_d());
        if (dev > rep.max_deviation) {
          rep.max_deviation = dev;
          rep.measured_degree = measured;
        }
      }
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.witness = probes[k];
        rep.witness_scale = s;
      }
    }
  }
  return rep;
}

}  // namespace minkval
