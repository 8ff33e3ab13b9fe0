#pragma once

#include <liepair/lie.hpp>

#include <span>

namespace liepair {

/// Element of Omega^k = Hom(Lambda^k a, B), stored on increasing a-index
/// tuples: coefficient (t, b) sits at t * q + b where t = pair.tuple_index.
class OmegaElement {
 public:
  OmegaElement(LiePair pair, std::size_t degree);
  /// Throws DegreeMismatch if the coefficient count is not omega_dim(degree).
  OmegaElement(LiePair pair, std::size_t degree, Vector coeffs);

  /// Degree-1 element with X(a_i)_b = m(b, i); m is q x r.
  static OmegaElement from_matrix(const LiePair& pair, const Matrix& m);
  Matrix to_matrix() const;

  const LiePair& pair() const { return pair_; }
  std::size_t degree() const { return degree_; }
  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }
  Scalar& at(std::size_t tuple, std::size_t b) { return coeffs_[tuple * pair_.quotient_dim() + b]; }
  const Scalar& at(std::size_t tuple, std::size_t b) const { return coeffs_[tuple * pair_.quotient_dim() + b]; }

  /// X(a_{i_1}, ..., a_{i_k}) for any index list (antisymmetry applied).
  Vector eval(std::span<const std::size_t> indices) const;
  /// X(v, a_{i_2}, ..., a_{i_k}) with v given in a-coordinates.
  Vector eval_first(const Vector& v, std::span<const std::size_t> rest) const;

  bool is_zero() const { return liepair::is_zero(coeffs_); }

  OmegaElement& operator+=(const OmegaElement& o);
  OmegaElement& operator-=(const OmegaElement& o);
  OmegaElement& operator*=(const Scalar& s);
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
  friend OmegaElement operator*(OmegaElement a, const Scalar& s) { return a *= s; }
  friend OmegaElement operator*(const Scalar& s, OmegaElement a) { return a *= s; }
  friend OmegaElement operator-(OmegaElement a) { return a *= Scalar(-1); }
  friend bool operator==(const OmegaElement& a, const OmegaElement& b);

 private:
  LiePair pair_;
  std::size_t degree_;
  Vector coeffs_;
};

/// Degree-0 piece of the extended algebra: a derivation plus a section of B.
struct HZero {
  Matrix derivation;
  OmegaElement section;
};

/// Chevalley-Eilenberg differential of the Bott module, Omega^k -> Omega^{k+1}.
OmegaElement d_ce(const OmegaElement& x);

/// Symmetric 2-bracket on degree-1 inputs.
OmegaElement b2_deg1(const OmegaElement& xi, const OmegaElement& eta);
/// Symmetric 3-bracket on degree-1 inputs.
OmegaElement b3_deg1(const OmegaElement& xi, const OmegaElement& eta, const OmegaElement& zeta);

/// [delta]_1(a) = -pr_B delta(a).
OmegaElement ext_b1(const LiePair& pair, const Matrix& delta);
/// [delta, X]_2 for X of any degree.
OmegaElement ext_b2(const Matrix& delta, const OmegaElement& x);
/// [delta_1, delta_2]_2, the commutator.
Matrix ext_b2_der(const Matrix& d1, const Matrix& d2);
/// [delta, X, Y]_3 of degree p + q - 1 (zero when that exceeds r).
OmegaElement ext_b3(const Matrix& delta, const OmegaElement& x, const OmegaElement& y);

/// Degree-0 differential of the extended algebra, (delta, b) -> [delta]_1 + d b.
OmegaElement h_zero_differential(const LiePair& pair, const HZero& h);

/// Omega^k (x) A: one OmegaElement per algebra basis element.
class AOmega {
 public:
  AOmega(LiePair pair, ArtinAlgebra alg, std::size_t degree);
  AOmega(ArtinAlgebra alg, std::vector<OmegaElement> parts);

  /// Degree-1 element from a q x r A-matrix.
  static AOmega from_amatrix(const LiePair& pair, const AMatrix& m);
  AMatrix to_amatrix() const;

  const LiePair& pair() const { return pair_; }
  const ArtinAlgebra& algebra() const { return alg_; }
  std::size_t degree() const { return degree_; }
  const OmegaElement& part(std::size_t alpha) const { return parts_[alpha]; }
  OmegaElement& part(std::size_t alpha) { return parts_[alpha]; }
  const std::vector<OmegaElement>& parts() const { return parts_; }

  bool is_zero() const;
  /// True iff every part on a basis element of m-adic degree < k vanishes.
  bool vanishes_below(std::size_t k) const;

  AOmega& operator+=(const AOmega& o);
  AOmega& operator-=(const AOmega& o);
  AOmega& operator*=(const Scalar& s);
  friend AOmega operator+(AOmega a, const AOmega& b) { return a += b; }
  friend AOmega operator-(AOmega a, const AOmega& b) { return a -= b; }
  friend AOmega operator*(AOmega a, const Scalar& s) { return a *= s; }
  friend AOmega operator*(const Scalar& s, AOmega a) { return a *= s; }
  friend AOmega operator-(AOmega a) { return a *= Scalar(-1); }
  friend bool operator==(const AOmega& a, const AOmega& b);

 private:
  LiePair pair_;
  ArtinAlgebra alg_;
  std::size_t degree_;
  std::vector<OmegaElement> parts_;
};

}  // namespace liepair
