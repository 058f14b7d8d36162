#include "pinf/linalg.hpp"

#include <algorithm>

namespace pinf {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::row(const Vector& v, const Field& f) {
  Matrix m(f, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
  return m;
}

Matrix Matrix::column(const Vector& v, const Field& f) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Mismatch("matrix dimension mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Mismatch("matrix dimension mismatch in sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw NotInvertible("non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) throw NotInvertible("singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    }
    Scalar s = a.at(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) *= s;
      inv.at(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) at(r + i, c + j) = block.at(i, j);
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Mismatch("vector length mismatch");
  if (a.empty()) return Scalar();
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw Mismatch("vector-matrix dimension mismatch");
  Vector r(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw Mismatch("matrix-vector dimension mismatch");
  Vector r(m.rows(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero() && !m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector RowSpan::reduce(Vector v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Vector& b = basis_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!b[j].is_zero()) v[j] -= c * b[j];
  }
  return v;
}

bool RowSpan::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar s = v[p].inverse();
  for (auto& x : v) x *= s;
  // Keep the basis fully reduced: clear column p in the other rows.
  for (auto& b : basis_) {
    const Scalar c = b[p];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) b[j] -= c * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpan::contains(const Vector& v) const { return is_zero(reduce(v)); }

Vector RowSpan::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error("vector is not in the span");
  Vector c;
  c.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c.push_back(v[pivots_[k]]);
  return c;
}

}  // namespace pinf
