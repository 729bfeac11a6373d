#include <gtest/gtest.h>

#include "minkval/errors.hpp"
#include "minkval/harness.hpp"

using namespace minkval;

namespace {

std::vector<Vector> union_of(const Polytope& a, const Polytope& b) {
  std::vector<Vector> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return pts;
}

ErrorCode config_error_code(const nlohmann::json& j) {
  try {
    SuiteConfig::from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kEmptyInput;
}

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.families_given = true;
  OperatorSpec pi;
  pi.family = "projection_body";
  OperatorSpec m;
  m.family = "moment_body";
  m.p = Exponent(2);
  cfg.families = {pi, m};
  cfg.dims = {3};
  cfg.lambdas = {Rational(1, 3)};
  cfg.scales = {Rational(1)};
  cfg.probes = 20;
  cfg.aux_probes = 10;
  cfg.chain_depth = 2;
  cfg.suites = {"valuation", "equivariance", "homogeneity", "vanishing"};
  return cfg;
}

}  // namespace

TEST(SuiteConfig, JsonRoundTrip) {
  SuiteConfig cfg = small_config();
  cfg.seed = 7;
  const SuiteConfig back = SuiteConfig::from_json(cfg.to_json());
  EXPECT_EQ(back.to_json(), cfg.to_json());
  EXPECT_EQ(back.seed, 7u);
  EXPECT_EQ(back.families.size(), 2u);
  EXPECT_TRUE(back.wants("valuation"));
  EXPECT_FALSE(back.wants("polar"));
}

TEST(SuiteConfig, MalformedInputIsConfigError) {
  EXPECT_EQ(config_error_code({{"no_such_key", 1}}), ErrorCode::kConfigError);
  EXPECT_EQ(config_error_code({{"probes", "many"}}), ErrorCode::kConfigError);
  EXPECT_EQ(config_error_code({{"suites", {"valuation", "bogus"}}}), ErrorCode::kConfigError);
  EXPECT_EQ(config_error_code({{"families", {{{"family", "no_such_family"}}}}}), ErrorCode::kConfigError);
  EXPECT_EQ(config_error_code(nlohmann::json::array()), ErrorCode::kConfigError);
}

TEST(SuiteConfig, EmptyFamilyListGivesEmptyBundle) {
  SuiteConfig cfg;
  cfg.families_given = true;
  const auto b = run_suite(cfg);
  EXPECT_TRUE(b.suites.empty());
  EXPECT_TRUE(b.ok());
}

TEST(Harness, DeterministicAcrossRuns) {
  const SuiteConfig cfg = small_config();
  const auto a = run_suite(cfg);
  const auto b = run_suite(cfg);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
}

TEST(Generators, SimplexSplitsMatchTransforms) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto splits = generate_simplex_splits(4, d, {Rational(1, 4), Rational(2, 3)}, {Rational(1, 2), Rational(2)});
    ASSERT_EQ(splits.size(), 4u);
    for (const auto& s : splits) {
      EXPECT_TRUE(s.pieces_match_transforms) << s.quad.key;
      const auto& q = s.quad;
      EXPECT_EQ(q.join, convex_hull(union_of(q.k, q.l))) << q.key;
      EXPECT_EQ(q.k.chart_volume() + q.l.chart_volume(), q.join.chart_volume()) << q.key;
      EXPECT_EQ(q.meet.dim(), static_cast<int>(d) - 1);
      for (const auto& v : q.meet.vertices()) {
        EXPECT_TRUE(q.k.contains(v));
        EXPECT_TRUE(q.l.contains(v));
      }
    }
  }
}

TEST(Generators, SplitDomain) {
  EXPECT_THROW(generate_simplex_splits(3, 4, {Rational(1, 2)}, {Rational(1)}), Error);
  EXPECT_THROW(generate_simplex_splits(3, 3, {Rational(1)}, {Rational(1)}), Error);
  EXPECT_THROW(generate_simplex_splits(3, 3, {Rational(1, 2)}, {Rational(0)}), Error);
}

TEST(Generators, UnionChainIsConvex) {
  for (std::size_t n : {3, 4}) {
    const auto chain = generate_union_chain(n, 3, 11 + n);
    ASSERT_EQ(chain.size(), 2u);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& q = chain[i];
      EXPECT_TRUE(q.join.is_full_dimensional());
      EXPECT_EQ(q.join, convex_hull(union_of(q.k, q.l))) << q.key;
      EXPECT_EQ(q.k.volume() + q.l.volume(), q.join.volume()) << q.key;
      EXPECT_EQ(q.meet.dim(), static_cast<int>(n) - 1);
      EXPECT_TRUE(q.meet.contains(Vector(n)));
      if (i + 1 < chain.size()) EXPECT_EQ(chain[i + 1].k, q.join);
    }
  }
  EXPECT_TRUE(generate_union_chain(3, 1, 5).empty());
  EXPECT_THROW(generate_union_chain(3, 4, 5), Error);
}

TEST(Generators, UnimodularMaps) {
  const auto maps = unimodular_maps(4, 12, 99);
  ASSERT_EQ(maps.size(), 12u);
  for (const auto& m : maps) {
    EXPECT_EQ(m.det(), 1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m.matrix()(i, j).get_den(), 1);
  }
  const auto again = unimodular_maps(4, 12, 99);
  EXPECT_TRUE(maps == again);
}

TEST(Checks, EquivarianceRejectsNonSpecialMap) {
  OperatorSpec s;
  s.family = "projection_body";
  const Operator op = Operator::make(s, 3);
  Matrix m = Matrix::identity(3);
  m(0, 0) = 2;
  const Polytope p = convex_hull({Vector{-1, -1, -1}, Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1}});
  try {
    check_equivariance(op, p, LinearMap(m), probe_set(3, 5, 1));
    FAIL() << "expected NotSpecialLinear";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSpecialLinear);
  }
}

TEST(Checks, EquivarianceHoldsForProjectionBody) {
  OperatorSpec s;
  s.family = "projection_body";
  const Operator op = Operator::make(s, 3);
  const Polytope p = convex_hull({Vector{-1, -1, -1}, Vector{2, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 3}});
  for (const auto& phi : unimodular_maps(3, 4, 3)) {
    EXPECT_TRUE(check_equivariance(op, p, phi, probe_set(3, 30, 2)).pass);
  }
}

TEST(Checks, NonMonotoneFamilyFailsWithReplayedWitness) {
  OperatorSpec bad;
  bad.family = "cov_linf";
  bad.p = Exponent::infinity();
  bad.a = {1, 3, 2, 4};
  bad.b = {0, 0, 0, 0};
  bad.mode = Mode::kUnchecked;
  const Operator op = Operator::make(bad, 4);
  const auto splits = generate_simplex_splits(4, 3, {Rational(1, 4)}, {Rational(1, 2)});
  ASSERT_EQ(splits.size(), 1u);
  const auto& q = splits[0].quad;

  // Hand-computed: at x = (0,1,-1,-1) the two sides of the identity are 9/8 and 1.
  const Vector x{0, 1, -1, -1};
  EXPECT_TRUE(valuation_violation(op, q, x));

  const CaseResult c = check_valuation_identity(op, q, {Vector{1, 0, 0, 0}, x});
  EXPECT_FALSE(c.pass);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(c.witness->replayed);
  EXPECT_TRUE(valuation_violation(op, q, c.witness->x));

  bad.mode = Mode::kExact;
  EXPECT_THROW(Operator::make(bad, 4), Error);
}

TEST(Counterexample, FixedNumbers) {
  const auto r = sublinearity_counterexample(5, 50);
  EXPECT_EQ(r.at_x, Scalar(4));
  EXPECT_EQ(r.at_y, Scalar(4));
  EXPECT_EQ(r.at_sum, Scalar(9));
  EXPECT_EQ(r.margin, Scalar(1));
  EXPECT_TRUE(r.closed_form_agrees);
  EXPECT_TRUE(r.sampler_finds_violation);
  EXPECT_TRUE(r.planar_analogue_subadditive);
  EXPECT_TRUE(r.verdict.ok());
}

TEST(Verdicts, CasesSortedAndCounted) {
  SuiteConfig cfg = small_config();
  cfg.suites = {"vanishing"};
  const auto b = run_suite(cfg);
  ASSERT_EQ(b.suites.size(), 1u);
  const Verdict* v = b.find("vanishing");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(b.find("polar"), nullptr);
  EXPECT_EQ(v->passed(), v->cases.size());
  for (std::size_t i = 1; i < v->cases.size(); ++i) EXPECT_LE(v->cases[i - 1].key, v->cases[i].key);
  const auto j = b.to_json(false);
  EXPECT_TRUE(j.contains("ok"));
  EXPECT_FALSE(j.dump().find("seconds") != std::string::npos);
}
