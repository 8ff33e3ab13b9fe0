#pragma once

#include <liepair/mc.hpp>

namespace liepair {

/// I_xi = i + j xi as an n x r A-matrix.
AMatrix i_xi(const AOmega& xi);

/// B-component of [I_xi a_1, I_xi a_2] - I_xi(pr_A [I_xi a_1, I_xi a_2]) as an
/// element of Omega^2 (x) A (the a-component vanishes identically).
AOmega std_defect(const AOmega& xi);

/// I_xi(pr_A [I_xi a_1, I_xi a_2]) = [I_xi a_1, I_xi a_2] on all a-basis pairs.
bool std_check(const AOmega& xi);

/// Bracket [a_1, a_2]^xi = pr_A [I_xi a_1, I_xi a_2] on a (x) A.
class InducedBracket {
 public:
  /// Table only; no std_check.
  static InducedBracket raw(const AOmega& xi);

  const ArtinAlgebra& algebra() const { return alg_; }
  std::size_t dim() const { return r_; }
  /// [a_i, a_j]^xi.
  const AVector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * r_ + j]; }
  AVector bracket(const AVector& u, const AVector& v) const;

  /// First basis triple violating Jacobi over A, if any.
  std::optional<std::vector<std::size_t>> jacobi_violation() const;
  bool antisymmetric() const;

 private:
  InducedBracket(ArtinAlgebra alg, std::size_t r, std::vector<AVector> table)
      : alg_(std::move(alg)), r_(r), table_(std::move(table)) {}
  ArtinAlgebra alg_;
  std::size_t r_;
  std::vector<AVector> table_;
};

/// Throws NotMaurerCartan when std_check fails.
InducedBracket induced_bracket(const AOmega& xi);

/// A-linear bracket automorphism of l (x) A with identity center.
class SmallAutomorphism {
 public:
  /// Throws NotSmall if the center is not the identity or the bracket is not preserved.
  SmallAutomorphism(LiePair pair, AMatrix map);

  static SmallAutomorphism identity(const LiePair& pair, const ArtinAlgebra& alg);
  static bool preserves_bracket(const LiePair& pair, const AMatrix& map);

  const LiePair& pair() const { return pair_; }
  const AMatrix& map() const { return map_; }

  /// Composition (this after other).
  SmallAutomorphism operator*(const SmallAutomorphism& other) const;
  friend bool operator==(const SmallAutomorphism& a, const SmallAutomorphism& b) { return a.map_ == b.map_; }

 private:
  LiePair pair_;
  AMatrix map_;
};

SmallAutomorphism exp_derivation(const GaugeParameter& delta);
/// Throws NotSmall on a non-identity center; the result is in `mode`
/// (NotADerivation if log lands outside it).
GaugeParameter log_automorphism(const SmallAutomorphism& pi, GaugeMode mode = GaugeMode::weak);
GaugeParameter log_automorphism(const LiePair& pair, const AMatrix& pi, GaugeMode mode = GaugeMode::weak);

/// pi |> xi = pr_B pi I_xi (pr_A pi I_xi)^{-1}. Requires std_check(xi); the
/// commuting square and closure are re-verified (InternalInconsistency).
AOmega act_on_sd(const SmallAutomorphism& pi, const AOmega& xi);

/// xi = iota_B iota_A^{-1} for an n x r A-map with center i whose image is
/// bracket-closed. Throws InvalidStructure on a wrong center and
/// NotMaurerCartan if the image is not closed.
AOmega standard_realization(const LiePair& pair, const AMatrix& inclusion);

struct XYSequences {
  std::vector<AMatrix> x;  // pr_A delta^k I_xi, r x r
  std::vector<AMatrix> y;  // pr_B delta^k I_xi, q x r
};

XYSequences xy_sequences(const GaugeParameter& delta, const AOmega& xi, std::size_t kmax);

/// y^k = -sum_p C(k, p) e^p o x^{k-p} for all k <= kmax.
bool appendix_check(const GaugeParameter& delta, const MCElement& xi, std::size_t kmax);

struct EquivResult {
  enum class Status { equivalent, not_equivalent, unknown };
  Status status = Status::unknown;
  std::size_t order = 0;
  std::optional<GaugeParameter> delta;
  std::optional<SmallAutomorphism> witness;
};

/// gauge_solve wrapped with the act_on_sd re-check of the witness.
EquivResult equiv_decide(const MCElement& xi, const MCElement& eta, GaugeMode mode);

}  // namespace liepair
