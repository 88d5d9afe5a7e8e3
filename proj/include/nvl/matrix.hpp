#pragma once

#include "nvl/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nvl {

/// Dense vector over a fixed field. Used both for column vectors (elements of
/// V) and row vectors (elements of V*); which one is meant follows from how it
/// is applied to a Matrix.
class Vector {
public:
  Vector() = default;
  Vector(FieldSpec field, std::size_t n);
  Vector(FieldSpec field, std::vector<Scalar> entries);

  static Vector unit(FieldSpec field, std::size_t n, std::size_t k);
  static Vector from_ints(FieldSpec field, std::initializer_list<long long> values);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool is_zero() const;

  Scalar& operator[](std::size_t k) { return e_[k]; }
  const Scalar& operator[](std::size_t k) const { return e_[k]; }
  const std::vector<Scalar>& entries() const { return e_; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  Vector operator-() const;
  friend bool operator==(const Vector& a, const Vector& b);

  /// Index of the first nonzero entry, or size() when zero.
  std::size_t leading_index() const;
  /// Contiguous slice [begin, begin + len).
  Vector slice(std::size_t begin, std::size_t len) const;

  std::string to_string() const;

private:
  FieldSpec field_;
  std::vector<Scalar> e_;
};

using ColVec = Vector;
using RowVec = Vector;

Scalar dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over a fixed field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(FieldSpec field, std::size_t n);
  /// E_{r,c} (0-based) in an n x n matrix.
  static Matrix unit(FieldSpec field, std::size_t n, std::size_t r, std::size_t c);
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  /// u v^T for a column u and a row v.
  static Matrix outer(const Vector& u, const Vector& v);
  /// Upper shift: ones on the superdiagonal (the regular nilpotent Jordan block).
  static Matrix jordan_block(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Column action M v.
  friend Vector operator*(const Matrix& m, const Vector& v);
  /// Row action v M.
  friend Vector operator*(const Vector& v, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> e_;
};

/// M^k for square M (k = 0 gives the identity).
Matrix power(const Matrix& m, std::size_t k);

} // namespace nvl
