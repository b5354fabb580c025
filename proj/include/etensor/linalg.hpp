#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "etensor/scalar.hpp"

namespace etensor {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
  /// True when v lies in the row space of the reduced matrix.
  bool row_space_contains(const Vector& v) const;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; empty when rank(m) = cols(m).
std::vector<Vector> kernel_basis(const Matrix& m);

/// One particular solution of m x = b, or nullopt when b is outside the column space.
/// Throws ShapeError when b.size() != rows(m).
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// dim span(z) - dim span(b). Throws InclusionError when some b-vector is outside span(z).
std::size_t quotient_dim(const std::vector<Vector>& z, const std::vector<Vector>& b);

/// Raised by quotient_dim; carries the first offending vector.
class InclusionError : public std::invalid_argument {
 public:
  InclusionError(const std::string& what, Vector witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const Vector& witness() const noexcept { return witness_; }

 private:
  Vector witness_;
};

}  // namespace etensor
