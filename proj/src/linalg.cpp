#include "minkval/linalg.hpp"

#include <cmath>

#include "minkval/errors.hpp"

namespace minkval {

Vector::Vector(std::initializer_list<long> xs) {
  c_.reserve(xs.size());
  for (long x : xs) c_.emplace_back(x);
}

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector Vector::from_double(const std::vector<double>& xs) {
  Vector v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = Rational(xs[i]);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<double> Vector::to_double() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.get_d());
  return out;
}

std::string Vector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + ")";
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "vector add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "vector sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector v = *this;
  for (auto& x : v.c_) x = -x;
  return v;
}

bool operator<(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector primitive(const Vector& v) {
  mpz_class l = 1, g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den().get_mpz_t());
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_num().get_mpz_t());
  }
  if (g != 0 && g != 1) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] /= Rational(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  Matrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += (*this)(i, k) * b(k, j);
    }
  return c;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  return *inv * b;
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::kDimensionMismatch, "linear map must be square");
  det_ = determinant(m_);
}

LinearMap LinearMap::inverse() const {
  auto inv = minkval::inverse(m_);
  if (!inv) throw Error(ErrorCode::kSingularMap, "map is not invertible");
  return LinearMap(std::move(*inv));
}

FloatMap FloatMap::from(const LinearMap& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.matrix()(i, j).get_d();
  return FloatMap(n, std::move(a));
}

std::vector<double> FloatMap::apply(const std::vector<double>& x) const {
  if (x.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "float map apply");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += a_[i * n_ + j] * x[j];
  return y;
}

double FloatMap::det() const {
  std::vector<double> m = a_;
  double det = 1.0;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n_; ++i)
      if (std::fabs(m[i * n_ + c]) > std::fabs(m[p * n_ + c])) p = i;
    if (m[p * n_ + c] == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[p * n_ + j], m[c * n_ + j]);
      det = -det;
    }
    det *= m[c * n_ + c];
    for (std::size_t i = c + 1; i < n_; ++i) {
      const double f = m[i * n_ + c] / m[c * n_ + c];
      for (std::size_t j = c; j < n_; ++j) m[i * n_ + j] -= f * m[c * n_ + j];
    }
  }
  return det;
}

}  // namespace minkval
