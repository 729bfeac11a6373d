#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "minkval/polytope.hpp"
#include "minkval/support.hpp"

namespace minkval {

enum class Sign { kPlus, kMinus };

// --- contravariant bodies --------------------------------------------------

// h(x) = 1/2 sum |x . A| over the atoms of the surface area measure. Defined
// for every P: it vanishes when dim P <= n - 2.
SupportEval projection_body(const Polytope& p);
// h_{Pi P} - h_{Pi-hat_1^+ P}.
SupportEval pi_o(const Polytope& p);
// h^p = sum over facets A_i not through o of (+-x . A_i)_+^p / h_P(A_i)^(p-1),
// with A_i the area vector; zero for dim P < n. Exact for integer p.
SupportEval asym_lp_projection(const Polytope& p, const Exponent& q, Sign sign);
// [o, u_i / h_P(u_i)] over facets not through o (reflected for kMinus);
// {o} for dim P < n.
Polytope asym_linf_projection(const Polytope& p, Sign sign);
// {y : y . v <= 1 for all vertices v}, by direct vertex enumeration.
// Throws OriginNotInterior.
Polytope polar_body(const Polytope& k);
// max{t > 0 : t x in P}. Throws RayOutsideBody when the ray leaves P at o,
// DomainViolation for x = 0.
Rational radial_function(const Polytope& p, const Vector& x);

// --- covariant bodies ------------------------------------------------------

// h^p(x) = int_P (+-x . y)_+^p dy for integer p, evaluated exactly through a
// confluent divided difference of t_+^(p+n) on each simplex of a fixed
// triangulation. Zero for dim P < n. Throws DomainViolation for non-integer
// or infinite p.
SupportEval moment_body(const Polytope& p, const Exponent& q, Sign sign);
// P (or -P) when dim P = n, {o} otherwise.
Polytope moment_body_linf(const Polytope& p, Sign sign);

struct MonteCarloEstimate {
  double value = 0.0;  // estimate of int_P (+-x . y)_+^p dy
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};
// Uniform sampling of P (simplex chosen by volume, Dirichlet barycentric
// weights); works for any real p >= 1.
MonteCarloEstimate moment_integral_mc(const Polytope& p, double q, Sign sign, const Vector& x,
                                      std::size_t samples, std::uint64_t seed);

// Phi_{p;a1,a2} P: lead h_P^p + (a2 - a1) sum_{1<=j<=dim P-1} (-1)^j
// sum_{F in F_{j,o}(P)} h_F^p, with lead = a1 for odd dim P and 2a2 - a1 for
// even dim P. Zero on {o}. With `reflected`, evaluates Phi(-P)(x) = Phi(P)(-x).
SupportEval phi_valuation(const Polytope& p, const Exponent& q, const Rational& a1, const Rational& a2,
                          bool reflected = false);
// Phi_{p;a1,a2} P + Phi_{p;b1,b2}(-P).
SupportEval phi_pair(const Polytope& p, const Exponent& q, const Rational& a1, const Rational& a2,
                     const Rational& b1, const Rational& b2);

// Closed form of (Phi_{p;a1,a2}[v0, e1..ed](x), Phi_{p;b1,b2}(-[v0, e1..ed])(x))
// in R^d, d = x.size(), for 0 <= m < d and o in relint [v0, e1..em].
// Throws OriginConditionViolated.
std::pair<Scalar, Scalar> phi_simplex_closed_form(const Vector& v0, std::size_t m, const Vector& x,
                                                  const Exponent& q, const Rational& a1, const Rational& a2,
                                                  const Rational& b1, const Rational& b2);

struct DiffParams {
  Rational a1, a2, b1, b2;
};
// Nonnegativity, a1 <= a2, b1 <= b2, a2 - a1 <= b2, b2 - b1 <= a2.
bool satisfies_constraints(const DiffParams& d);

// Support function of D P for P in R^3 through the face sums over edges and
// 2-faces through o (case split on dim P). Throws FamilyDimensionMismatch for
// n != 3 and ConstraintViolation when `checked`.
SupportEval difference_body(const Polytope& p, const DiffParams& d, bool checked = true);
// Vertex form for T = [o, v1..vd]: [a2 vi - b2 vj, a2 vi - (a2-a1) vj,
// (b2-b1) vi - b2 vj], and [-b1 v1, a1 v1] for d = 1. Throws DomainViolation
// when T is not a simplex with o as a vertex.
Polytope difference_body_simplex(const Polytope& t, const DiffParams& d, bool checked = true);

// --- operator families -------------------------------------------------------

enum class Mode { kExact, kFloat, kUnchecked };
enum class Variance { kCovariant, kContravariant };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

// The family names accepted by OperatorSpec.
const std::vector<std::string>& family_names();

// A family name plus its parameters. Families:
//   identity, projection_body, pi_o, asym_lp_projection (p, sign),
//   asym_linf_projection (sign), moment_body (p, sign), moment_body_linf (sign),
//   phi (p, a1, a2, b1, b2), difference_body (a1, a2, b1, b2),
//   contra_lp (p; c1, c2, c3 for p = 1, c1, c2 otherwise),
//   contra_linf (c1, c2), cov_linf (vectors a, b of length n),
//   cov_lp (p, c1..c4), cov_r3 (c1, c2, a1, a2, b1, b2).
struct OperatorSpec {
  std::string family;
  Exponent p = Exponent(1);
  std::map<std::string, Rational> coefficients;
  std::vector<Rational> a, b;
  Sign sign = Sign::kPlus;
  Mode mode = Mode::kExact;
  bool expect_pass = true;
  std::string name;  // display label; defaults to a summary of the fields above

  Rational coef(const std::string& key, const Rational& fallback = 0) const;
  std::string label() const;
  nlohmann::json to_json() const;
  // Throws ParseError.
  static OperatorSpec from_json(const nlohmann::json& j);
};

struct OperatorValue {
  SupportEval field;            // h^p, or h when the exponent is infinite
  std::optional<Polytope> body;  // when the value is an explicit polytope
};

class Operator {
 public:
  // Validates the family, its parameters (unless mode is unchecked) and the
  // ambient dimension. Throws DomainViolation, ConstraintViolation,
  // FamilyDimensionMismatch.
  static Operator make(const OperatorSpec& spec, std::size_t n);

  const OperatorSpec& spec() const { return spec_; }
  std::size_t dim() const { return n_; }
  Variance variance() const { return variance_; }
  // Exponent of the field: p for L_p families, infinity for polytope values.
  const Exponent& exponent() const { return exponent_; }
  // Homogeneity degree q with Z(sP) = s^q ZP, when the family has one.
  const std::optional<Rational>& degree() const { return degree_; }

  OperatorValue apply(const Polytope& p) const;
  SupportEval field(const Polytope& p) const { return apply(p).field; }

 private:
  Operator(OperatorSpec spec, std::size_t n);
  OperatorValue apply_exact(const Polytope& p) const;

  OperatorSpec spec_;
  std::size_t n_ = 0;
  Variance variance_ = Variance::kCovariant;
  Exponent exponent_ = Exponent(1);
  std::optional<Rational> degree_;
};

}  // namespace minkval
