#pragma once

#include <liepair/amap.hpp>

#include <memory>
#include <string>
#include <vector>

namespace liepair {

struct LieReport {
  bool ok = false;
  std::string axiom;  // "shape", "antisymmetry", "jacobi"
  std::vector<std::size_t> witness;
  std::string message() const;
};

/// Checks antisymmetry and the Jacobi identity on all basis triples.
LieReport validate_lie(const Tensor3& constants);

/// Finite-dimensional Lie algebra, [b_i, b_j] = sum_k f(i, j, k) b_k.
class LieAlgebra {
 public:
  /// Throws InvalidStructure with the validation message on failure.
  static LieAlgebra from_constants(std::vector<std::string> labels, const Tensor3& constants);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tensor3& constants() const { return f_; }

  Vector bracket(const Vector& u, const Vector& v) const;
  /// A-bilinear extension of the bracket to l (x) A.
  AVector bracket(const ArtinAlgebra& alg, const AVector& u, const AVector& v) const;
  /// Matrix of ad_u = [u, -]; column j is [u, b_j].
  Matrix ad(const Vector& u) const;

  /// Same algebra in a new basis whose elements are the columns of `basis`
  /// (old coordinates). Throws InvalidStructure if `basis` is singular.
  LieAlgebra change_basis(const Matrix& basis, std::vector<std::string> labels) const;

 private:
  LieAlgebra(std::vector<std::string> labels, Tensor3 f) : labels_(std::move(labels)), f_(std::move(f)) {}
  std::vector<std::string> labels_;
  Tensor3 f_;
};

/// Derivation of a Lie algebra: D[u,v] = [Du,v] + [u,Dv]. Over a point the
/// symbol vanishes, so a derivation is just this matrix.
class Derivation {
 public:
  /// Throws NotADerivation with a witness pair if the Leibniz rule fails.
  Derivation(const LieAlgebra& lie, Matrix m);

  static bool satisfies_leibniz(const LieAlgebra& lie, const Matrix& m);

  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Basis of Der(l), row-reduced in the row-major coordinates of the matrices.
std::vector<Derivation> derivation_space(const LieAlgebra& lie);

Derivation inner_derivation(const LieAlgebra& lie, const Vector& u);

/// Lie algebra with an adapted basis: indices [0, r) span the subalgebra a,
/// indices [r, n) span the image of the splitting j of B = l/a. Carries the
/// Bott connection and the cached derivation data used by the brackets.
class LiePair {
 public:
  /// Throws InvalidStructure for rank 0 or n, NotASubalgebra (with witness) if
  /// the first `rank` basis vectors are not bracket-closed.
  static LiePair make(LieAlgebra lie, std::size_t rank, std::string name = {});

  const std::string& name() const;
  const LieAlgebra& lie() const;
  std::size_t dim() const;
  std::size_t rank() const;           // dim a
  std::size_t quotient_dim() const;   // dim B

  /// nabla_{a_i} as a q x q matrix on B.
  const Matrix& bott(std::size_t i) const;
  const std::vector<Derivation>& derivations() const;
  /// ad_{b_0}, ..., ad_{b_{n-1}}; spans IDer(l).
  const std::vector<Matrix>& inner_derivations() const;
  /// ad_{j(b_0)}, ..., ad_{j(b_{q-1})}.
  const std::vector<Matrix>& complement_derivations() const;

  /// Strictly increasing k-tuples of a-indices in lexicographic order.
  const std::vector<std::vector<std::size_t>>& tuples(std::size_t k) const;
  /// Position of a strictly increasing tuple in tuples(k).
  std::size_t tuple_index(const std::vector<std::size_t>& sorted) const;
  std::size_t omega_dim(std::size_t k) const { return tuples(k).size() * quotient_dim(); }

  Vector include(const Vector& a) const;   // i
  Vector split(const Vector& b) const;     // j
  Vector project_a(const Vector& v) const; // pr_A
  Vector project_b(const Vector& v) const; // pr_B

  friend bool operator==(const LiePair& a, const LiePair& b);

 private:
  struct Data;
  explicit LiePair(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

inline LiePair validate_pair(LieAlgebra lie, std::size_t rank) { return LiePair::make(std::move(lie), rank); }

/// True iff the splitting complement (indices r..n-1) is bracket-closed.
bool is_matched(const LiePair& pair);

}  // namespace liepair
