#pragma once

#include <liepair/artin.hpp>

namespace liepair {

/// Element of V (x) A, stored as one K-vector per algebra basis element.
using AVector = std::vector<Vector>;

AVector zero_avector(const ArtinAlgebra& alg, std::size_t dim);
bool is_zero(const AVector& v);

/// A-linear map V (x) A -> W (x) A written as sum_alpha M_alpha (x) m_alpha,
/// with M_0 the center (the image under ev).
class AMatrix {
 public:
  AMatrix(ArtinAlgebra alg, std::size_t rows, std::size_t cols);

  /// center (x) 1.
  static AMatrix constant(const ArtinAlgebra& alg, const Matrix& center);
  static AMatrix identity(const ArtinAlgebra& alg, std::size_t n);

  const ArtinAlgebra& algebra() const { return alg_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Matrix& block(std::size_t alpha) { return blocks_[alpha]; }
  const Matrix& block(std::size_t alpha) const { return blocks_[alpha]; }
  const Matrix& center() const { return blocks_[0]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  bool is_zero() const;
  AVector apply(const AVector& v) const;

  /// Sub-map on rows [r0, r0 + nr) and columns [c0, c0 + nc) of every block.
  AMatrix slice(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  AMatrix& operator+=(const AMatrix& other);
  AMatrix& operator-=(const AMatrix& other);
  AMatrix& operator*=(const Scalar& s);
  friend AMatrix operator+(AMatrix a, const AMatrix& b) { return a += b; }
  friend AMatrix operator-(AMatrix a, const AMatrix& b) { return a -= b; }
  friend AMatrix operator*(AMatrix a, const Scalar& s) { return a *= s; }
  friend AMatrix operator*(const Scalar& s, AMatrix a) { return a *= s; }
  /// Composition (a after b), multiplying coefficients through the algebra.
  friend AMatrix operator*(const AMatrix& a, const AMatrix& b);
  friend bool operator==(const AMatrix& a, const AMatrix& b);

 private:
  ArtinAlgebra alg_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix> blocks_;
};

/// Inverse of a square A-linear map with invertible center: with
/// C^{-1} M = 1 + n and n nilpotent, M^{-1} = (sum_k (-n)^k) C^{-1}.
/// Throws NotAUnit when the center is singular.
AMatrix invert(const AMatrix& m);

/// m^k; m^0 is the identity.
AMatrix power(const AMatrix& m, unsigned k);

}  // namespace liepair
