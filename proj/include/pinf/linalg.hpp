#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinf/core/scalar.hpp"

namespace pinf {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix row(const Vector& v, const Field& f);
  static Matrix column(const Vector& v, const Field& f);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row_vector(std::size_t i) const;
  Vector column_vector(std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  /// Two-sided inverse; throws NotInvertible when singular.
  Matrix inverse() const;

  /// Block placement helper: copies `block` with top-left corner (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar dot(const Vector& a, const Vector& b);
/// Row vector times matrix.
Vector operator*(const Vector& v, const Matrix& m);
/// Matrix times column vector.
Vector operator*(const Matrix& m, const Vector& v);
bool is_zero(const Vector& v);

/// Incrementally maintained reduced row echelon basis of a subspace of
/// F^dim. Coordinates of a member with respect to the basis rows are read
/// off at the pivot columns.
class RowSpan {
 public:
  RowSpan(Field f, std::size_t dim) : field_(f), dim_(dim) {}

  /// Adds v to the span; returns false if v was already a member.
  bool insert(Vector v);
  bool contains(const Vector& v) const;
  /// Coordinates of a member v (throws if v is not in the span).
  Vector coordinates(const Vector& v) const;

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dimension() const { return dim_; }

 private:
  Vector reduce(Vector v) const;

  Field field_;
  std::size_t dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pinf
