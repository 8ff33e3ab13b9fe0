#pragma once

#include <liepair/matrix.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace liepair {

struct ProductTerm {
  std::size_t index;
  Scalar coeff;
};

/// Outcome of checking a raw multiplication table against the axioms of a
/// local Artinian algebra. Never throws; the first violation is recorded.
struct ArtinReport {
  bool ok = false;
  std::string axiom;                 // "shape", "unital", "commutative", "associative", "ideal", "nilpotent"
  std::vector<std::size_t> witness;  // basis indices exhibiting the violation
  std::size_t nilpotency = 0;        // largest N with m^N != 0
  std::vector<std::size_t> degrees;  // m-adic degree of each basis element (unit: 0)
  bool adapted = false;              // m^k is spanned by basis elements of degree >= k, for all k

  std::string message() const;
};

ArtinReport validate_artin(const Tensor3& table);

/// Finite-dimensional local commutative K-algebra given by a multiplication
/// table. Basis index 0 is the unit; indices 1.. span the maximal ideal and
/// are sorted by m-adic degree. Immutable and cheap to copy.
class ArtinAlgebra {
 public:
  /// K[t_1..t_vars]/(t_1..t_vars)^degree with the degree-lex monomial basis.
  static ArtinAlgebra truncated(std::size_t vars, std::size_t degree);
  static ArtinAlgebra dual_numbers() { return truncated(1, 2); }
  /// The ground field K, the target of the evaluation map.
  static ArtinAlgebra ground();
  /// Validates and, if needed, re-bases onto an adapted, degree-sorted basis.
  /// Throws InvalidStructure with the report message when an axiom fails.
  static ArtinAlgebra from_table(std::vector<std::string> labels, const Tensor3& table,
                                 std::string name = {});

  std::size_t dim() const;
  const std::string& name() const;
  const std::vector<std::string>& labels() const;
  const Tensor3& table() const;
  std::size_t nilpotency() const;
  std::size_t degree(std::size_t index) const;
  std::span<const ProductTerm> product(std::size_t i, std::size_t j) const;

  /// Product of two coefficient vectors.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Row-reduced basis of m^k (k >= 1) in coefficient coordinates.
  std::vector<Vector> ideal_power(std::size_t k) const;

  friend bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b);

 private:
  struct Data;
  explicit ArtinAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class ArtinElement {
 public:
  ArtinElement(ArtinAlgebra algebra, Vector coeffs);

  static ArtinElement scalar(const ArtinAlgebra& algebra, const Scalar& s);
  static ArtinElement basis(const ArtinAlgebra& algebra, std::size_t index);

  const ArtinAlgebra& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  friend ArtinElement operator+(const ArtinElement& a, const ArtinElement& b);
  friend ArtinElement operator-(const ArtinElement& a, const ArtinElement& b);
  friend ArtinElement operator*(const ArtinElement& a, const ArtinElement& b);
  friend ArtinElement operator*(const Scalar& s, const ArtinElement& a);
  friend bool operator==(const ArtinElement& a, const ArtinElement& b);

 private:
  ArtinAlgebra algebra_;
  Vector coeffs_;
};

/// The quotient map A -> A/m = K.
Scalar ev(const ArtinElement& a);

/// Inverse of a unit via the finite Neumann series; throws NotAUnit if ev(a) = 0.
ArtinElement invert_unit(const ArtinElement& a);

/// Unital algebra morphism A -> A' mapping m into m'. Column j of the matrix
/// is the image of source basis element j.
class ArtinMorphism {
 public:
  /// Throws InvalidStructure if the matrix is not a local algebra morphism.
  ArtinMorphism(ArtinAlgebra source, ArtinAlgebra target, Matrix matrix);

  static ArtinMorphism identity(const ArtinAlgebra& a);
  static ArtinMorphism evaluation(const ArtinAlgebra& a);
  /// Sends each source basis element to the target basis element with the
  /// same label, or to zero. Suits truncations K[t]/(t^k) -> K[t]/(t^j), j <= k.
  static ArtinMorphism by_labels(const ArtinAlgebra& source, const ArtinAlgebra& target);

  const ArtinAlgebra& source() const { return source_; }
  const ArtinAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  ArtinAlgebra source_;
  ArtinAlgebra target_;
  Matrix matrix_;
};

ArtinElement morph_apply(const ArtinMorphism& theta, const ArtinElement& a);

}  // namespace liepair
