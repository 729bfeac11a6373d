#include "minkval/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "minkval/errors.hpp"

namespace minkval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kOriginNotContained: return "OriginNotContained";
    case ErrorCode::kOriginNotInterior: return "OriginNotInterior";
    case ErrorCode::kSingularMap: return "SingularMap";
    case ErrorCode::kNotSpecialLinear: return "NotSpecialLinear";
    case ErrorCode::kDimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegenerateBasis: return "DegenerateBasis";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kLowerDimensional: return "LowerDimensional";
    case ErrorCode::kOriginConditionViolated: return "OriginConditionViolated";
    case ErrorCode::kConstraintViolation: return "ConstraintViolation";
    case ErrorCode::kFamilyDimensionMismatch: return "FamilyDimensionMismatch";
    case ErrorCode::kRayOutsideBody: return "RayOutsideBody";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kDomainViolation: return "DomainViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty rational");
  Rational q;
  try {
    const auto dot = s.find('.');
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
      // Decimal literal: exact conversion, e.g. "0.25" -> 1/4.
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const auto frac_len = s.size() - dot - 1;
      mpz_class num(digits.empty() || digits == "-" ? "0" : digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      q = Rational(num, den);
    } else {
      if (q.set_str(s, 10) != 0) throw Error(ErrorCode::kParseError, "bad rational '" + text + "'");
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParseError, "bad rational '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

Exponent::Exponent(Rational p) : value_(std::move(p)) {
  if (value_ < 0) throw Error(ErrorCode::kDomainViolation, "negative exponent");
}

Exponent Exponent::infinity() {
  Exponent e;
  e.infinite_ = true;
  return e;
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return Exponent(parse_rational(text));
}

bool Exponent::is_integer() const { return !infinite_ && value_.get_den() == 1; }

unsigned long Exponent::as_unsigned() const {
  if (!is_integer() || !value_.get_num().fits_ulong_p()) {
    throw Error(ErrorCode::kDomainViolation, "exponent is not a small integer");
  }
  return value_.get_num().get_ui();
}

const Rational& Exponent::value() const {
  if (infinite_) throw Error(ErrorCode::kDomainViolation, "infinite exponent has no value");
  return value_;
}

double Exponent::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

std::string Exponent::str() const { return infinite_ ? "inf" : value_.get_str(); }

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

// ---------------------------------------------------------------------------

const Rational& Scalar::rational() const {
  if (!is_exact()) throw Error(ErrorCode::kDomainViolation, "scalar is not exact");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(v_).get_d();
  return std::get<double>(v_);
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(v_));
  const double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(v_).get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
  return buf;
}

namespace {

template <class ExactOp, class FloatOp>
void combine(std::variant<Rational, double>& lhs, const Scalar& rhs, ExactOp exact, FloatOp fl) {
  if (std::holds_alternative<Rational>(lhs) && rhs.is_exact()) {
    exact(std::get<Rational>(lhs), rhs.rational());
  } else {
    const double a = std::holds_alternative<Rational>(lhs) ? std::get<Rational>(lhs).get_d()
                                                           : std::get<double>(lhs);
    lhs = fl(a, rhs.to_double());
  }
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(v_, o, [](Rational& a, const Rational& b) { a += b; }, [](double a, double b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(v_, o, [](Rational& a, const Rational& b) { a -= b; }, [](double a, double b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(v_, o, [](Rational& a, const Rational& b) { a *= b; }, [](double a, double b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw Error(ErrorCode::kDomainViolation, "division by zero");
  combine(v_, o, [](Rational& a, const Rational& b) { a /= b; }, [](double a, double b) { return a / b; });
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
  return from_double(-std::get<double>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

bool exact_root(const Rational& q, unsigned long b, Rational* out) {
  if (q < 0) return false;
  if (b == 1) {
    *out = q;
    return true;
  }
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), b) == 0) return false;
  if (mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), b) == 0) return false;
  *out = Rational(num, den);
  out->canonicalize();
  return true;
}

namespace {

Rational int_pow(const Rational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar pow(const Scalar& base, const Exponent& p) {
  if (p.is_infinite()) throw Error(ErrorCode::kDomainViolation, "pow with infinite exponent");
  if (base.is_exact()) {
    const Rational& q = base.rational();
    if (p.is_integer() && p.value().get_num().fits_ulong_p()) {
      return Scalar(int_pow(q, p.as_unsigned()));
    }
    if (q < 0) throw Error(ErrorCode::kDomainViolation, "fractional power of a negative number");
    const Rational& e = p.value();
    if (e.get_num().fits_ulong_p() && e.get_den().fits_ulong_p()) {
      Rational r;
      if (exact_root(q, e.get_den().get_ui(), &r)) return Scalar(int_pow(r, e.get_num().get_ui()));
    }
  } else if (base.to_double() < 0 && !p.is_integer()) {
    throw Error(ErrorCode::kDomainViolation, "fractional power of a negative number");
  }
  return Scalar::from_double(std::pow(base.to_double(), p.to_double()));
}

Scalar root(const Scalar& value, const Exponent& p) {
  if (p.is_infinite()) return value;
  if (value.sign() < 0) throw Error(ErrorCode::kNegativeInput, "root of a negative value");
  const Rational& e = p.value();
  if (e == 1) return value;
  if (e == 0) throw Error(ErrorCode::kDomainViolation, "zeroth root");
  if (value.is_exact() && e.get_num().fits_ulong_p() && e.get_den().fits_ulong_p()) {
    // value^(den/num)
    Rational r;
    if (exact_root(value.rational(), e.get_num().get_ui(), &r)) {
      return Scalar(int_pow(r, e.get_den().get_ui()));
    }
  }
  return Scalar::from_double(std::pow(value.to_double(), 1.0 / p.to_double()));
}

Scalar signed_power(const Scalar& a, const Exponent& p) {
  if (a.sign() >= 0) return pow(a, p);
  return -pow(-a, p);
}

}  // namespace minkval
