#include <gtest/gtest.h>

#include <cmath>

#include "minkval/errors.hpp"
#include "minkval/support.hpp"

using namespace minkval;

namespace {

Polytope cube3() { return box({-1, -1, -1}, {1, 1, 1}); }

// A field that is not a support function: h(x) = |x1 + x2|^2 is not
// subadditive (h(e1 + e2) = 4 > h(e1) + h(e2) = 2).
SupportEval square_field() {
  return SupportEval(2, Exponent(1), FieldKind::kCombination,
                     [](const Vector& x) {
                       Rational s = x[0] + x[1];
                       return Scalar(Rational(s * s));
                     },
                     "square");
}

}  // namespace

TEST(SupportEval, OfPolytopeIsMaxOverVertices) {
  auto h = SupportEval::of(cube3());
  EXPECT_EQ(h.eval(Vector{1, -2, 3}), Scalar(6));
  EXPECT_EQ(h.eval(Vector{0, 0, 0}), Scalar(0));
  EXPECT_THROW(h.eval(Vector{1, 2}), Error);
}

TEST(SupportEval, ZeroField) {
  auto z = SupportEval::zero(3, Exponent(2));
  EXPECT_EQ(z.eval(Vector{1, 2, 3}), Scalar(0));
  EXPECT_EQ(z.exponent(), Exponent(2));
}

TEST(LpSum, ExactForIntegerExponent) {
  // (3^2 h_A^2 + 4^2 h_B^2)^(1/2) at a point where both are 1 gives 5.
  auto a = SupportEval::of(standard_simplex(2, 2));
  auto b = SupportEval::of(standard_simplex(2, 2).reflected());
  auto s = lp_sum({{3, a}, {4, b}}, Exponent(2));
  // h_T(1,0) = 1, h_{-T}(1,0) = 0
  EXPECT_EQ(s.eval(Vector{1, 0}), Scalar(3));
  // h_T(1,-1) = 1, h_{-T}(1,-1) = 1
  EXPECT_EQ(s.eval(Vector{1, -1}), Scalar(5));
  EXPECT_EQ(s.power(Vector{1, -1}), Scalar(25));
}

TEST(LpSum, InfinityIsMax) {
  auto a = SupportEval::of(standard_simplex(2, 2));
  auto b = SupportEval::of(standard_simplex(2, 2).reflected());
  auto s = lp_sum({{2, a}, {3, b}}, Exponent::infinity());
  EXPECT_EQ(s.eval(Vector{1, -1}), Scalar(3));
  EXPECT_EQ(s.eval(Vector{1, 0}), Scalar(2));
}

TEST(LpSum, RejectsNegativeWeightsAndTerms) {
  auto a = SupportEval::of(standard_simplex(2, 2));
  EXPECT_THROW(lp_sum({{-1, a}}, Exponent(2)), Error);
  auto neg = SupportEval(2, Exponent(1), FieldKind::kCombination, [](const Vector&) { return Scalar(-1); }, "neg");
  auto s = lp_sum({{1, neg}}, Exponent(2));
  try {
    s.eval(Vector{1, 0});
    FAIL() << "expected NegativeInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeInput);
  }
}

TEST(LpSum, NonIntegerExponentMatchesDouble) {
  auto a = SupportEval::of(standard_simplex(2, 2));
  auto b = SupportEval::of(standard_simplex(2, 2).reflected());
  auto s = lp_sum({{1, a}, {1, b}}, Exponent(Rational(3, 2)));
  EXPECT_NEAR(s.eval(Vector{1, -1}).to_double(), std::pow(2.0, 2.0 / 3.0), 1e-12);
}

TEST(Probes, FixedPartIsDeterministic) {
  auto a = probe_set(3, 0, 1);
  auto b = probe_set(3, 0, 99);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 26u);  // sign vectors; e_i +- e_j are among them
  auto c = probe_set(4, 200, 5);
  EXPECT_EQ(c.size(), 200u);
  EXPECT_NE(std::find(c.begin(), c.end(), Vector{2, 6, 5, 5}), c.end());
  EXPECT_EQ(random_directions(4, 10, 7), random_directions(4, 10, 7));
}

TEST(Subadditivity, SupportFunctionPasses) {
  auto rep = subadditivity_check(SupportEval::of(cube3()), 200, 3);
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.samples, 300u);
}

TEST(Subadditivity, NonConvexFieldFailsWithWitness) {
  auto rep = subadditivity_check(square_field(), 50, 3);
  ASSERT_FALSE(rep.pass);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(violates_subadditivity(square_field(), rep.witness->first, rep.witness->second));
  EXPECT_GT(rep.margin, Scalar(0));
  EXPECT_EQ(rep.hxy - rep.hx - rep.hy, rep.margin);
  auto j = rep.to_json();
  EXPECT_EQ(j["pass"], false);
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Homogeneity, IdentityHasDegreeOne) {
  auto probes = probe_set(3, 40, 1);
  auto rep = homogeneity_check([](const Polytope& p) { return SupportEval::of(p); }, cube3(), 1,
                               {Rational(1, 2), 2, 3}, probes);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.exact);
  EXPECT_NEAR(rep.measured_degree, 1.0, 1e-12);
}

TEST(Homogeneity, WrongDegreeIsReported) {
  auto probes = probe_set(3, 0, 1);
  auto rep = homogeneity_check([](const Polytope& p) { return SupportEval::of(p); }, cube3(), 2, {2}, probes);
  EXPECT_FALSE(rep.pass);
  EXPECT_TRUE(rep.witness.has_value());
  EXPECT_NEAR(rep.measured_degree, 1.0, 1e-12);
}

TEST(Scalars, AgreeWithTolerance) {
  EXPECT_TRUE(scalars_agree(Scalar(Rational(1, 3)), Scalar(Rational(1, 3)), 0));
  EXPECT_FALSE(scalars_agree(Scalar(Rational(1, 3)), Scalar(Rational(1, 3) + Rational(1, 1000000000)), 1e-3));
  EXPECT_TRUE(scalars_agree(Scalar::from_double(1.0 / 3), Scalar(Rational(1, 3)), 1e-12));
  EXPECT_TRUE(scalars_agree(Scalar::from_double(1e-14), Scalar(0), 1e-9));
}
