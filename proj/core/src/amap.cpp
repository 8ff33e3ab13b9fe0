#include <liepair/amap.hpp>
#include <liepair/errors.hpp>

namespace liepair {

AVector zero_avector(const ArtinAlgebra& alg, std::size_t dim) { return AVector(alg.dim(), Vector(dim)); }

bool is_zero(const AVector& v) {
  for (const auto& part : v)
    if (!is_zero(part)) return false;
  return true;
}

AMatrix::AMatrix(ArtinAlgebra alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), blocks_(alg_.dim(), Matrix(rows, cols)) {}

AMatrix AMatrix::constant(const ArtinAlgebra& alg, const Matrix& center) {
  AMatrix m(alg, center.rows(), center.cols());
  m.blocks_[0] = center;
  return m;
}

AMatrix AMatrix::identity(const ArtinAlgebra& alg, std::size_t n) { return constant(alg, Matrix::identity(n)); }

bool AMatrix::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

AVector AMatrix::apply(const AVector& v) const {
  if (v.size() != alg_.dim()) throw AlgebraMismatch("AMatrix::apply: coefficient count mismatch");
  AVector out = zero_avector(alg_, rows_);
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    if (blocks_[a].is_zero()) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (liepair::is_zero(v[b])) continue;
      auto image = blocks_[a].apply(v[b]);
      for (const auto& term : alg_.product(a, b))
        for (std::size_t i = 0; i < rows_; ++i)
          if (sgn(image[i]) != 0) out[term.index][i] += term.coeff * image[i];
    }
  }
  return out;
}

AMatrix AMatrix::slice(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  AMatrix out(alg_, nr, nc);
  for (std::size_t a = 0; a < blocks_.size(); ++a)
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out.blocks_[a](i, j) = blocks_[a](r0 + i, c0 + j);
  return out;
}

AMatrix& AMatrix::operator+=(const AMatrix& other) {
  if (!(alg_ == other.alg_)) throw AlgebraMismatch("AMatrix: algebra mismatch");
  for (std::size_t a = 0; a < blocks_.size(); ++a) blocks_[a] += other.blocks_[a];
  return *this;
}

AMatrix& AMatrix::operator-=(const AMatrix& other) {
  if (!(alg_ == other.alg_)) throw AlgebraMismatch("AMatrix: algebra mismatch");
  for (std::size_t a = 0; a < blocks_.size(); ++a) blocks_[a] -= other.blocks_[a];
  return *this;
}

AMatrix& AMatrix::operator*=(const Scalar& s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

AMatrix operator*(const AMatrix& a, const AMatrix& b) {
  if (!(a.alg_ == b.alg_)) throw AlgebraMismatch("AMatrix: algebra mismatch");
  if (a.cols_ != b.rows_) throw DegreeMismatch("AMatrix: shape mismatch in composition");
  AMatrix c(a.alg_, a.rows_, b.cols_);
  for (std::size_t x = 0; x < a.blocks_.size(); ++x) {
    if (a.blocks_[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.blocks_.size(); ++y) {
      auto terms = a.alg_.product(x, y);
      if (terms.empty() || b.blocks_[y].is_zero()) continue;
      Matrix prod = a.blocks_[x] * b.blocks_[y];
      for (const auto& term : terms) c.blocks_[term.index] += prod * term.coeff;
    }
  }
  return c;
}

bool operator==(const AMatrix& a, const AMatrix& b) {
  return a.alg_ == b.alg_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.blocks_ == b.blocks_;
}

AMatrix invert(const AMatrix& m) {
  if (m.rows() != m.cols()) throw DegreeMismatch("invert: map is not square");
  auto cinv = inverse(m.center());
  if (!cinv) throw NotAUnit("invert: center is singular");
  const auto& alg = m.algebra();
  AMatrix normalized = AMatrix::constant(alg, *cinv) * m;  // 1 + n
  AMatrix neg_n = AMatrix::identity(alg, m.rows()) - normalized;
  AMatrix term = AMatrix::identity(alg, m.rows());
  AMatrix sum = term;
  for (std::size_t k = 1; k <= alg.nilpotency(); ++k) {
    term = term * neg_n;
    sum += term;
  }
  return sum * AMatrix::constant(alg, *cinv);
}

AMatrix power(const AMatrix& m, unsigned k) {
  if (m.rows() != m.cols()) throw DegreeMismatch("power: map is not square");
  AMatrix out = AMatrix::identity(m.algebra(), m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace liepair
