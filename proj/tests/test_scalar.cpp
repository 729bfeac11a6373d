#include <gtest/gtest.h>

#include <cmath>

#include "minkval/errors.hpp"
#include "minkval/linalg.hpp"
#include "minkval/scalar.hpp"

using namespace minkval;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Exponent, ParseAndClassify) {
  EXPECT_TRUE(Exponent::parse("inf").is_infinite());
  Exponent p = Exponent::parse("3");
  EXPECT_TRUE(p.is_integer());
  EXPECT_EQ(p.as_unsigned(), 3u);
  EXPECT_FALSE(Exponent::parse("1/2").is_integer());
  EXPECT_THROW(Exponent(Rational(-1)), Error);
  EXPECT_THROW(Exponent::infinity().value(), Error);
}

TEST(Scalar, ExactArithmeticStaysExact) {
  Scalar a(Rational(1, 3));
  Scalar b(Rational(2, 3));
  Scalar c = a + b;
  ASSERT_TRUE(c.is_exact());
  EXPECT_EQ(c.rational(), Rational(1));
  EXPECT_THROW(a / Scalar(0), Error);
}

TEST(Scalar, MixedArithmeticDegrades) {
  Scalar a(Rational(1, 2));
  Scalar d = a * Scalar::from_double(0.5);
  EXPECT_FALSE(d.is_exact());
  EXPECT_DOUBLE_EQ(d.to_double(), 0.25);
  EXPECT_THROW(d.rational(), Error);
}

TEST(Scalar, PowAndRoot) {
  EXPECT_EQ(pow(Scalar(Rational(2, 3)), Exponent(3)).rational(), Rational(8, 27));
  // perfect powers stay exact under rational exponents
  Scalar r = pow(Scalar(Rational(4, 9)), Exponent(Rational(3, 2)));
  ASSERT_TRUE(r.is_exact());
  EXPECT_EQ(r.rational(), Rational(8, 27));
  Scalar s = root(Scalar(Rational(27, 8)), Exponent(3));
  ASSERT_TRUE(s.is_exact());
  EXPECT_EQ(s.rational(), Rational(3, 2));
  Scalar t = root(Scalar(2), Exponent(2));
  EXPECT_FALSE(t.is_exact());
  EXPECT_NEAR(t.to_double(), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(root(Scalar(-1), Exponent(2)), Error);
}

TEST(Scalar, SignedPower) {
  EXPECT_EQ(signed_power(Scalar(-2), Exponent(2)).rational(), Rational(-4));
  EXPECT_EQ(signed_power(Scalar(-2), Exponent(3)).rational(), Rational(-8));
  EXPECT_EQ(signed_power(Scalar(3), Exponent(2)).rational(), Rational(9));
  EXPECT_NEAR(signed_power(Scalar(-2), Exponent(Rational(1, 2))).to_double(), -std::sqrt(2.0), 1e-14);
}

TEST(Scalar, Ordering) {
  EXPECT_LT(Scalar(Rational(1, 3)), Scalar(Rational(1, 2)));
  EXPECT_EQ(max(Scalar(1), Scalar(Rational(3, 2))).rational(), Rational(3, 2));
  EXPECT_LT(Scalar::from_double(0.3), Scalar(Rational(1, 3)));
}

TEST(Linalg, DeterminantRankInverse) {
  Matrix m = Matrix::from_rows({Vector{1, 2, -3}, Vector{3, -1, 1}, Vector{5, 3, -2}});
  // cofactor expansion by hand: 1*(2-3) - 2*(-6-5) + (-3)*(9+5) = -1 + 22 - 42
  EXPECT_EQ(determinant(m), Rational(-21));
  auto x = solve(m, Vector{1, 5, 7});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, Vector(std::vector<Rational>{Rational(11, 7), Rational(-2, 7), Rational(0)}));
  Matrix sing = Matrix::from_rows({Vector{1, 2}, Vector{2, 4}});
  EXPECT_EQ(rank(sing), 1u);
  EXPECT_FALSE(inverse(sing).has_value());
  EXPECT_EQ(nullspace(sing).size(), 1u);
}

TEST(Linalg, MapsAndPrimitive) {
  LinearMap a(Matrix::from_rows({Vector{1, 1}, Vector{0, 1}}));
  EXPECT_TRUE(a.is_sl());
  EXPECT_EQ(a * a.inverse(), LinearMap::identity(2));
  LinearMap s(Matrix::from_rows({Vector{1, 1}, Vector{1, 1}}));
  EXPECT_THROW(s.inverse(), Error);
  Vector v(std::vector<Rational>{Rational(2, 3), Rational(-4, 9)});
  EXPECT_EQ(primitive(v), (Vector{3, -2}));
}
