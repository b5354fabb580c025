#include "etensor/linalg.hpp"

#include <utility>

#include "etensor/errors.hpp"

namespace etensor {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("Matrix::apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (etensor::is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, c);
      if (!etensor::is_zero(a)) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!etensor::is_zero(x)) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw ShapeError("Matrix product: dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (etensor::is_zero(a)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const auto& b = other(k, c);
        if (!etensor::is_zero(b)) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("Matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("Matrix difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  out -= other;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
// Only the nonzero entries of the pivot row are touched during elimination.
Echelon row_reduce(Matrix m) {
  Echelon result;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t next = 0;
  std::vector<std::size_t> support;
  Scalar factor;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t pivot = next;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != next) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(next, k));
    }
    const Scalar inv = 1 / m(next, c);
    support.clear();
    for (std::size_t k = c; k < cols; ++k) {
      if (!is_zero(m(next, k))) {
        m(next, k) *= inv;
        support.push_back(k);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || is_zero(m(r, c))) continue;
      factor = m(r, c);
      for (std::size_t k : support) m(r, k) -= factor * m(next, k);
    }
    result.pivot_cols.push_back(c);
    ++next;
  }
  result.reduced = std::move(m);
  return result;
}

bool Echelon::row_space_contains(const Vector& v) const {
  if (v.size() != reduced.cols()) throw ShapeError("row_space_contains: dimension mismatch");
  Vector rest = v;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    const Scalar f = rest[pivot_cols[i]];
    if (is_zero(f)) continue;
    for (std::size_t k = pivot_cols[i]; k < reduced.cols(); ++k) {
      const auto& a = reduced(i, k);
      if (!is_zero(a)) rest[k] -= f * a;
    }
  }
  return is_zero(rest);
}

std::size_t rank(const Matrix& m) {
  // Eliminating along the shorter side is cheaper; rank is transpose-invariant.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).rank();
  return row_reduce(m).rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

std::size_t quotient_dim(const std::vector<Vector>& z, const std::vector<Vector>& b) {
  if (z.empty()) {
    for (const auto& v : b) {
      if (!is_zero(v)) throw InclusionError("quotient_dim: B is not contained in span(Z)", v);
    }
    return 0;
  }
  const std::size_t dim = z.front().size();
  const Echelon ez = row_reduce(Matrix::from_rows(z, dim));
  for (const auto& v : b) {
    if (!ez.row_space_contains(v)) throw InclusionError("quotient_dim: B is not contained in span(Z)", v);
  }
  const std::size_t rank_b = b.empty() ? 0 : row_reduce(Matrix::from_rows(b, dim)).rank();
  return ez.rank() - rank_b;
}

}  // namespace etensor
