// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "minkval/harness.hpp"

using namespace minkval;

namespace {

// Pinned tolerances. Rational values are compared exactly regardless; these
// only apply where a value is irrational (non-integer p, float transforms).
constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-12;
constexpr std::size_t kProbes = 500;
constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  std::function<std::string(const VerdictBundle&)> extra;  // empty string: ok
};

std::string summarize(const Verdict& v) {
  return std::to_string(v.passed()) + "/" + std::to_string(v.cases.size());
}

std::string first_bad(const Verdict& v) {
  for (const auto& c : v.cases)
    if (!c.ok()) return c.key + (c.note.empty() ? "" : " (" + c.note + ")");
  return "";
}

std::string expect_witnesses(const VerdictBundle& b) {
  const Verdict* v = b.find("negative");
  if (!v || v->cases.size() != 2) return "expected two negative cases";
  for (const auto& c : v->cases) {
    if (c.pass) return c.key + ": no witness found";
    if (!c.witness || !c.witness->replayed) return c.key + ": witness did not replay";
  }
  return "";
}

std::string expect_counterexample_numbers(const VerdictBundle&) {
  const auto r = sublinearity_counterexample(kSeed, kProbes);
  if (r.at_x != Scalar(4) || r.at_y != Scalar(4) || r.at_sum != Scalar(9)) return "phi sums differ from 4, 4, 9";
  if (r.margin != Scalar(1)) return "margin is " + r.margin.str();
  return "";
}

std::string expect_moment_values(const VerdictBundle&) {
  OperatorSpec m;
  m.family = "moment_body";
  const Operator op = Operator::make(m, 2);
  const Polytope tri = convex_hull({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
  const Polytope sq = convex_hull({Vector{-1, -1}, Vector{-1, 1}, Vector{1, -1}, Vector{1, 1}});
  const Vector e1{1, 0};
  // int_T y1 dy = 1/6 and int_{[-1,1]^2} (y1)_+ dy = 1.
  if (op.field(tri).eval(e1) != Scalar(Rational(1, 6))) return "h(M_1 T^2, e1) = " + op.field(tri).eval(e1).str();
  if (op.field(sq).eval(e1) != Scalar(1)) return "h(M_1 [-1,1]^2, e1) = " + op.field(sq).eval(e1).str();
  return "";
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.rel_tol = kRelTol;
  cfg.abs_tol = kAbsTol;
  cfg.probes = kProbes;
  cfg.seed = kSeed;

  const std::vector<Criterion> criteria{
      {1, "four-dimensional counterexample (sums 4, 4, 9; margin 1)", {"counterexample"}, expect_counterexample_numbers},
      {2, "face-lattice sums agree with the simplex closed form", {"closed_form"}, {}},
      {3, "valuation identity on simplex splits and union chains", {"valuation"}, {}},
      {4, "SL(n) equivariance under unimodular and split maps", {"equivariance"}, {}},
      {5, "homogeneity degrees", {"homogeneity"}, {}},
      {6, "asymmetric L_inf projection body of K is the polar body", {"polar"}, {}},
      {7, "L_p to L_inf limit within 5% and monotone", {"limit"}, {}},
      {8, "moment body exact values and Monte Carlo agreement", {"moment"}, expect_moment_values},
      {9, "negative tests produce witnesses", {"negative"}, expect_witnesses},
      {10, "difference body of T^d equals the sum of two face-lattice sums", {"difference"}, {}},
  };

  for (const auto& c : criteria) cfg.suites.insert(c.suites.begin(), c.suites.end());
  const auto t0 = std::chrono::steady_clock::now();
  const VerdictBundle bundle = run_suite(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int failed = 0;
  for (const auto& c : criteria) {
    std::string why, counts;
    for (const auto& s : c.suites) {
      const Verdict* v = bundle.find(s);
      if (!v) {
        why = "suite " + s + " did not run";
        break;
      }
      counts += (counts.empty() ? "" : ", ") + s + " " + summarize(*v);
      if (!v->ok()) {
        why = "unexpected outcome in " + first_bad(*v);
        break;
      }
    }
    if (why.empty() && c.extra) why = c.extra(bundle);
    const bool ok = why.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s [%s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), counts.c_str(),
                ok ? "" : ": ", why.c_str());
  }
  std::printf("%d of %zu criteria passed (rel_tol %g, abs_tol %g, %zu probes, seed %llu, %.1f s)\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), kRelTol, kAbsTol, kProbes,
              static_cast<unsigned long long>(kSeed), secs);
  return failed == 0 ? 0 : 1;
}
