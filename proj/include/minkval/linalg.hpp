#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "minkval/scalar.hpp"

namespace minkval {

// Exact coordinate vector in R^n.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : c_(n) {}
  Vector(std::initializer_list<long> xs);
  explicit Vector(std::vector<Rational> xs) : c_(std::move(xs)) {}

  static Vector unit(std::size_t n, std::size_t i);
  static Vector from_double(const std::vector<double>& xs);

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  std::vector<double> to_double() const;
  std::string str() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
  // Lexicographic order; the canonical vertex order of a polytope.
  friend bool operator<(const Vector& a, const Vector& b);

 private:
  std::vector<Rational> c_;
};

Rational dot(const Vector& a, const Vector& b);
// Smallest positive rescaling with coprime integer entries.
Vector primitive(const Vector& v);

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& b) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational determinant(Matrix m);
std::size_t rank(Matrix m);
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
// Unique solution of m x = b for square invertible m, otherwise nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

// Square exact linear map with cached determinant; the carrier of SL(n)/GL(n)
// actions on polytopes.
class LinearMap {
 public:
  explicit LinearMap(Matrix entries);
  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Rational& det() const { return det_; }
  bool is_sl() const { return det_ == 1; }

  Vector apply(const Vector& x) const { return m_ * x; }
  LinearMap transpose() const { return LinearMap(m_.transpose()); }
  // Throws SingularMap.
  LinearMap inverse() const;
  LinearMap inverse_transpose() const { return inverse().transpose(); }
  LinearMap operator*(const LinearMap& o) const { return LinearMap(m_ * o.m_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  Rational det_;
};

// Double-precision linear map, for transforms with irrational entries.
class FloatMap {
 public:
  FloatMap(std::size_t n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {}
  static FloatMap from(const LinearMap& m);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<double> apply(const std::vector<double>& x) const;
  double det() const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

}  // namespace minkval
