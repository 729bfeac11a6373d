#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "minkval/polytope.hpp"
#include "minkval/scalar.hpp"

namespace minkval {

enum class FieldKind {
  kPolytope,        // max over vertices
  kFacetSum,        // finite sum over facet data
  kFaceLatticeSum,  // alternating sums over faces through o
  kCombination,     // L_p combination of other fields
  kIntegral,        // moment integrals
};

// A p-homogeneous field x -> h(x)^p on R^n. For p = infinity the field is h
// itself. Cheap to copy; the closure holds whatever precomputed data it needs.
class SupportEval {
 public:
  using Fn = std::function<Scalar(const Vector&)>;

  SupportEval(std::size_t n, Exponent p, FieldKind kind, Fn power, std::string label);
  // h_P, evaluated exactly as a max over vertices.
  static SupportEval of(const Polytope& p, std::string label = "h_P");
  static SupportEval zero(std::size_t n, Exponent p, std::string label = "0");

  std::size_t dim() const { return n_; }
  const Exponent& exponent() const { return p_; }
  FieldKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // h(x)^p (or h(x) when p is infinite). Throws DimensionMismatch.
  Scalar power(const Vector& x) const;
  // h(x) = power(x)^(1/p).
  Scalar eval(const Vector& x) const;

 private:
  std::size_t n_;
  Exponent p_;
  FieldKind kind_;
  Fn fn_;
  std::string label_;
};

// (sum c_i^p h_i^p)^(1/p), or max c_i h_i for p = infinity. Terms whose own
// exponent equals p are combined through their power() without taking roots,
// which keeps integer-p combinations exact. Evaluation throws NegativeInput if
// a term is negative at the probe.
SupportEval lp_sum(const std::vector<std::pair<Rational, SupportEval>>& terms, const Exponent& p,
                   std::string label = "lp_sum");
SupportEval lp_combine(const SupportEval& h1, const SupportEval& h2, const Exponent& p,
                       const Rational& c1 = 1, const Rational& c2 = 1);

// Probe directions: sign vectors in {-1,0,1}^n (n <= 4), e_i +- e_j, the
// four-dimensional counterexample vectors when n = 4, then seeded random
// integer directions round(1024 u) with u uniform on the sphere, up to
// `count` vectors in total (never fewer than the fixed ones).
std::vector<Vector> probe_set(std::size_t n, std::size_t count, std::uint64_t seed);
std::vector<Vector> random_directions(std::size_t n, std::size_t count, std::uint64_t seed);

struct SubadditivityReport {
  std::string label;
  bool pass = true;
  // Worst violation h(x + y) - h(x) - h(y) > tol found.
  std::optional<std::pair<Vector, Vector>> witness;
  Scalar hx, hy, hxy;
  Scalar margin;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tol = 0.0;

  nlohmann::json to_json() const;
};

// Pairs all fixed probes with each other and adds `random_pairs` seeded
// random pairs. Exact comparison when the values are exact (tol then only
// applies to double evaluations).
SubadditivityReport subadditivity_check(const SupportEval& h, std::size_t random_pairs, std::uint64_t seed,
                                        double tol = 1e-12);
// Re-evaluates one pair.
bool violates_subadditivity(const SupportEval& h, const Vector& x, const Vector& y, double tol = 1e-12);

struct HomogeneityReport {
  bool pass = true;
  Rational expected_degree;
  double measured_degree = 0.0;  // worst measured exponent
  double max_deviation = 0.0;    // |measured - expected|
  bool exact = false;            // every comparison was done in rationals
  std::optional<Vector> witness;
  Rational witness_scale;
  std::size_t checks = 0;

  nlohmann::json to_json() const;
};

// Checks power(op(sP))(x) = s^(q p) power(op(P))(x) (s^q for p = infinity) on
// the probes. Exact whenever q p is an integer and the values are rational,
// otherwise relative tolerance `tol`. The measured degree is
// log(ratio) / (p log s) over probes with nonzero values.
HomogeneityReport homogeneity_check(const std::function<SupportEval(const Polytope&)>& op, const Polytope& p,
                                    const Rational& q, const std::vector<Rational>& scales,
                                    const std::vector<Vector>& probes, double tol = 1e-10);

// Relative comparison with an absolute floor; exact when both are exact.
bool scalars_agree(const Scalar& a, const Scalar& b, double rel_tol, double abs_floor = 1e-12);

}  // namespace minkval
