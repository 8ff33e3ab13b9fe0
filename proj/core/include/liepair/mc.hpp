#pragma once

#include <liepair/omega.hpp>

#include <optional>

namespace liepair {

enum class GaugeMode { weak, semistrict, matched };

std::string to_string(GaugeMode mode);
/// Throws ParseError for unknown names.
GaugeMode parse_gauge_mode(std::string_view name);

/// Spanning set of the derivations allowed in a mode: Der(l), IDer(l), or
/// ad_{j(b)}. Matched mode throws InvalidStructure on a non-matched pair.
std::vector<Matrix> mode_generators(const LiePair& pair, GaugeMode mode);

/// Candidate or verified MC element xi in Omega^1 (x) m.
class MCElement {
 public:
  /// Throws DegreeMismatch unless xi has degree 1 and no unit component.
  explicit MCElement(AOmega xi);

  /// Returns a verified copy; throws NotMaurerCartan if the residual is nonzero.
  MCElement certify() const;

  const AOmega& value() const { return xi_; }
  const LiePair& pair() const { return xi_.pair(); }
  const ArtinAlgebra& algebra() const { return xi_.algebra(); }
  bool verified() const { return verified_; }

  friend bool operator==(const MCElement& a, const MCElement& b) { return a.xi_ == b.xi_; }

 private:
  AOmega xi_;
  bool verified_ = false;
};

/// delta = sum_alpha delta_alpha (x) m_alpha with delta_alpha in the mode subspace.
class GaugeParameter {
 public:
  /// Zero parameter.
  GaugeParameter(LiePair pair, ArtinAlgebra alg, GaugeMode mode = GaugeMode::weak);
  /// Throws NotADerivation if a part leaves the mode subspace, DegreeMismatch
  /// on shape errors or a nonzero unit component.
  GaugeParameter(LiePair pair, ArtinAlgebra alg, std::vector<Matrix> parts, GaugeMode mode = GaugeMode::weak);

  const LiePair& pair() const { return pair_; }
  const ArtinAlgebra& algebra() const { return alg_; }
  GaugeMode mode() const { return mode_; }
  const Matrix& part(std::size_t alpha) const { return parts_[alpha]; }
  const std::vector<Matrix>& parts() const { return parts_; }
  bool is_zero() const;

  /// The A-linear endomorphism of l (x) A.
  AMatrix to_amatrix() const;

  friend bool operator==(const GaugeParameter& a, const GaugeParameter& b) { return a.parts_ == b.parts_; }

 private:
  LiePair pair_;
  ArtinAlgebra alg_;
  GaugeMode mode_;
  std::vector<Matrix> parts_;
};

// A-multilinear extensions of the brackets.
AOmega d_ce(const AOmega& x);
AOmega bracket2(const AOmega& x, const AOmega& y);
AOmega bracket3(const AOmega& x, const AOmega& y, const AOmega& z);
AOmega ext_b1(const GaugeParameter& delta);
AOmega ext_b2(const GaugeParameter& delta, const AOmega& x);
AOmega ext_b3(const GaugeParameter& delta, const AOmega& x, const AOmega& y);

/// d xi + 1/2 [xi, xi]_2 + 1/6 [xi, xi, xi]_3 in Omega^2 (x) m.
AOmega mc_residual(const AOmega& xi);
inline AOmega mc_residual(const MCElement& xi) { return mc_residual(xi.value()); }
bool is_mc(const AOmega& xi);
inline bool is_mc(const MCElement& xi) { return is_mc(xi.value()); }

/// e^0, ..., e^kmax of the gauge recursion. Throws NotMaurerCartan for an
/// unverified xi.
std::vector<AOmega> getzler_e(const GaugeParameter& delta, const MCElement& xi, std::size_t kmax);

/// xi - sum_{k >= 1} e^k / k!, re-verified; throws InternalInconsistency if
/// the result is not MC.
MCElement gauge_act(const GaugeParameter& delta, const MCElement& xi);

struct GaugeSolveResult {
  enum class Status { found, not_equivalent, not_found_at_order };
  Status status = Status::not_found_at_order;
  std::size_t order = 0;
  std::optional<GaugeParameter> witness;
};

/// Order-by-order search for delta with gauge_act(delta, xi) = eta.
GaugeSolveResult gauge_solve(const MCElement& xi, const MCElement& eta, GaugeMode mode);

struct Obstruction {
  std::size_t alpha;   // basis element of A carrying the class
  OmegaElement cocycle;
};

struct ExtendResult {
  std::optional<AOmega> extended;
  std::optional<Obstruction> obstruction;
};

/// xi must satisfy MC modulo m^k (residual vanishes below degree k). Returns
/// xi + c with MC modulo m^{k+1}, c supported in degree k, or the first
/// non-exact order-k residual component.
ExtendResult mc_extend(const AOmega& xi, std::size_t k);

/// (id (x) theta) xi over the target algebra, certified.
MCElement mc_push(const ArtinMorphism& theta, const MCElement& xi);
GaugeParameter gauge_push(const ArtinMorphism& theta, const GaugeParameter& delta);

}  // namespace liepair
