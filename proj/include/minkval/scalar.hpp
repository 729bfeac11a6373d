#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <variant>

namespace minkval {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Homogeneity / L_p exponent. Either a non-negative rational or infinity.
class Exponent {
 public:
  Exponent() : value_(1) {}
  Exponent(long p) : value_(p) {}  // NOLINT(google-explicit-constructor)
  explicit Exponent(Rational p);

  static Exponent infinity();
  static Exponent parse(const std::string& text);

  bool is_infinite() const { return infinite_; }
  bool is_integer() const;
  unsigned long as_unsigned() const;
  const Rational& value() const;
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b);

 private:
  Rational value_;
  bool infinite_ = false;
};

// A real number that is exact (rational) whenever the computation allows and
// degrades to double precision otherwise. Mixed arithmetic yields double.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long q) : v_(Rational(q)) {}       // NOLINT(google-explicit-constructor)
  static Scalar from_double(double d) { Scalar s; s.v_ = d; return s; }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  double to_double() const;
  int sign() const;
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  // Exact comparison when both sides are exact, otherwise by double value.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> v_;
};

Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& a);

// base^p for base >= 0 (or any base when p is an integer). Exact when the
// result is rational: integer p, or rational p = a/b with a perfect b-th root.
Scalar pow(const Scalar& base, const Exponent& p);

// value^(1/p) for value >= 0; exact when the root is rational.
Scalar root(const Scalar& value, const Exponent& p);

// sgn(a)|a|^p.
Scalar signed_power(const Scalar& a, const Exponent& p);

// Exact b-th root of a non-negative rational if it exists.
bool exact_root(const Rational& q, unsigned long b, Rational* out);

}  // namespace minkval
