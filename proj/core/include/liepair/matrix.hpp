#pragma once

#include <liepair/scalar.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace liepair {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of equal length `cols`).
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;
  Vector apply(std::span<const Scalar> v) const;

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row-echelon form with pivots chosen as the first nonzero entry
/// scanning columns left to right and rows top to bottom.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix a);

/// Rank by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}, one vector per free column, in echelon order.
std::vector<Vector> nullspace(const Matrix& a);

/// Some x with A x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Nonzero rows of the reduced row-echelon form of the row space.
std::vector<Vector> row_space(const std::vector<Vector>& vectors, std::size_t dim);

bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace liepair

namespace liepair {

std::optional<Matrix> inverse(const Matrix& a);

/// Cubic tensor t(i, j, k), i, j, k < n, flattened row-major. Used for
/// multiplication tables and Lie structure constants.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace liepair
