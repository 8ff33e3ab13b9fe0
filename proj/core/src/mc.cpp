#include <liepair/errors.hpp>
#include <liepair/mc.hpp>

#include <algorithm>

namespace liepair {

std::string to_string(GaugeMode mode) {
  switch (mode) {
    case GaugeMode::weak: return "weak";
    case GaugeMode::semistrict: return "semistrict";
    case GaugeMode::matched: return "matched";
  }
  return "weak";
}

GaugeMode parse_gauge_mode(std::string_view name) {
  if (name == "weak") return GaugeMode::weak;
  if (name == "semistrict") return GaugeMode::semistrict;
  if (name == "matched") return GaugeMode::matched;
  throw ParseError("unknown gauge mode '" + std::string(name) + "'");
}

std::vector<Matrix> mode_generators(const LiePair& pair, GaugeMode mode) {
  switch (mode) {
    case GaugeMode::weak: {
      std::vector<Matrix> out;
      for (const auto& d : pair.derivations()) out.push_back(d.matrix());
      return out;
    }
    case GaugeMode::semistrict: return pair.inner_derivations();
    case GaugeMode::matched:
      if (!is_matched(pair)) throw InvalidStructure("matched mode requires a matched pair");
      return pair.complement_derivations();
  }
  return {};
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) v.push_back(x);
  return v;
}

bool in_mode(const LiePair& pair, GaugeMode mode, const Matrix& m) {
  if (m.is_zero()) return true;
  if (mode == GaugeMode::weak) return Derivation::satisfies_leibniz(pair.lie(), m);
  std::vector<Vector> gens;
  for (const auto& g : mode_generators(pair, mode)) gens.push_back(flatten(g));
  return in_span(gens, flatten(m));
}

}  // namespace

MCElement::MCElement(AOmega xi) : xi_(std::move(xi)) {
  if (xi_.degree() != 1) throw DegreeMismatch("MC element must have degree 1");
  if (!xi_.part(0).is_zero()) throw DegreeMismatch("MC element must lie in Omega^1 (x) m");
}

MCElement MCElement::certify() const {
  if (!is_mc(xi_)) throw NotMaurerCartan("Maurer-Cartan residual is nonzero");
  MCElement out(*this);
  out.verified_ = true;
  return out;
}

GaugeParameter::GaugeParameter(LiePair pair, ArtinAlgebra alg, GaugeMode mode)
    : pair_(std::move(pair)), alg_(std::move(alg)), mode_(mode), parts_(alg_.dim(), Matrix(pair_.dim(), pair_.dim())) {
  if (mode == GaugeMode::matched && !is_matched(pair_)) throw InvalidStructure("matched mode requires a matched pair");
}

GaugeParameter::GaugeParameter(LiePair pair, ArtinAlgebra alg, std::vector<Matrix> parts, GaugeMode mode)
    : pair_(std::move(pair)), alg_(std::move(alg)), mode_(mode), parts_(std::move(parts)) {
  if (parts_.size() != alg_.dim()) throw DegreeMismatch("gauge parameter: part count does not match algebra");
  for (const auto& p : parts_)
    if (p.rows() != pair_.dim() || p.cols() != pair_.dim()) throw DegreeMismatch("gauge parameter: part shape");
  if (!parts_[0].is_zero()) throw DegreeMismatch("gauge parameter must lie in Der (x) m");
  if (mode == GaugeMode::matched && !is_matched(pair_)) throw InvalidStructure("matched mode requires a matched pair");
  for (std::size_t a = 1; a < parts_.size(); ++a)
    if (!in_mode(pair_, mode_, parts_[a]))
      throw NotADerivation("gauge parameter component " + std::to_string(a) + " is not in the " + to_string(mode_) +
                           " subspace");
}

bool GaugeParameter::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Matrix& m) { return m.is_zero(); });
}

AMatrix GaugeParameter::to_amatrix() const {
  AMatrix m(alg_, pair_.dim(), pair_.dim());
  for (std::size_t a = 0; a < parts_.size(); ++a) m.block(a) = parts_[a];
  return m;
}

namespace {

void require_same(const AOmega& a, const AOmega& b) {
  if (!(a.algebra() == b.algebra()) || !(a.pair() == b.pair())) throw AlgebraMismatch("mismatched algebra or pair");
}

void require_same(const GaugeParameter& d, const AOmega& x) {
  if (!(d.algebra() == x.algebra()) || !(d.pair() == x.pair())) throw AlgebraMismatch("mismatched algebra or pair");
}

template <class Fn>
void for_pairs(const ArtinAlgebra& alg, std::size_t n1, std::size_t n2, Fn&& fn) {
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (const auto& t : alg.product(a, b)) fn(a, b, t);
}

}  // namespace

AOmega d_ce(const AOmega& x) {
  std::vector<OmegaElement> parts;
  for (const auto& p : x.parts()) parts.push_back(d_ce(p));
  return {x.algebra(), std::move(parts)};
}

AOmega bracket2(const AOmega& x, const AOmega& y) {
  require_same(x, y);
  const auto& alg = x.algebra();
  AOmega out(x.pair(), alg, 2);
  for_pairs(alg, alg.dim(), alg.dim(), [&](std::size_t a, std::size_t b, const ProductTerm& t) {
    if (x.part(a).is_zero() || y.part(b).is_zero()) return;
    out.part(t.index) += t.coeff * b2_deg1(x.part(a), y.part(b));
  });
  return out;
}

AOmega bracket3(const AOmega& x, const AOmega& y, const AOmega& z) {
  require_same(x, y);
  require_same(x, z);
  const auto& alg = x.algebra();
  AOmega out(x.pair(), alg, 2);
  for_pairs(alg, alg.dim(), alg.dim(), [&](std::size_t a, std::size_t b, const ProductTerm& t) {
    if (x.part(a).is_zero() || y.part(b).is_zero()) return;
    for (std::size_t c = 0; c < alg.dim(); ++c) {
      if (z.part(c).is_zero()) continue;
      for (const auto& u : alg.product(t.index, c))
        out.part(u.index) += (t.coeff * u.coeff) * b3_deg1(x.part(a), y.part(b), z.part(c));
    }
  });
  return out;
}

AOmega ext_b1(const GaugeParameter& delta) {
  std::vector<OmegaElement> parts;
  for (const auto& p : delta.parts()) parts.push_back(ext_b1(delta.pair(), p));
  return {delta.algebra(), std::move(parts)};
}

AOmega ext_b2(const GaugeParameter& delta, const AOmega& x) {
  require_same(delta, x);
  const auto& alg = x.algebra();
  AOmega out(x.pair(), alg, x.degree());
  for_pairs(alg, alg.dim(), alg.dim(), [&](std::size_t a, std::size_t b, const ProductTerm& t) {
    if (delta.part(a).is_zero() || x.part(b).is_zero()) return;
    out.part(t.index) += t.coeff * ext_b2(delta.part(a), x.part(b));
  });
  return out;
}

AOmega ext_b3(const GaugeParameter& delta, const AOmega& x, const AOmega& y) {
  require_same(delta, x);
  require_same(x, y);
  const auto& alg = x.algebra();
  AOmega out(x.pair(), alg, x.degree() + y.degree() - 1);
  for_pairs(alg, alg.dim(), alg.dim(), [&](std::size_t a, std::size_t b, const ProductTerm& t) {
    if (delta.part(a).is_zero() || x.part(b).is_zero()) return;
    for (std::size_t c = 0; c < alg.dim(); ++c) {
      if (y.part(c).is_zero()) continue;
      for (const auto& u : alg.product(t.index, c))
        out.part(u.index) += (t.coeff * u.coeff) * ext_b3(delta.part(a), x.part(b), y.part(c));
    }
  });
  return out;
}

AOmega mc_residual(const AOmega& xi) {
  if (xi.degree() != 1) throw DegreeMismatch("mc_residual: degree-1 element expected");
  return d_ce(xi) + Scalar(1, 2) * bracket2(xi, xi) + Scalar(1, 6) * bracket3(xi, xi, xi);
}

bool is_mc(const AOmega& xi) { return mc_residual(xi).is_zero(); }

namespace {

std::vector<AOmega> getzler_raw(const GaugeParameter& delta, const AOmega& xi, std::size_t kmax) {
  require_same(delta, xi);
  std::vector<AOmega> e;
  e.push_back(-xi);
  if (kmax == 0) return e;
  e.push_back(ext_b1(delta) - ext_b2(delta, xi) + Scalar(1, 2) * ext_b3(delta, xi, xi));
  for (std::size_t k = 1; k < kmax; ++k) {
    AOmega next = ext_b2(delta, e[k]) - ext_b3(delta, xi, e[k]);
    for (std::size_t k1 = 1; k1 < k; ++k1) {
      Scalar c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(k1)) / 2;
      next += c * ext_b3(delta, e[k1], e[k - k1]);
    }
    e.push_back(std::move(next));
  }
  return e;
}

AOmega act_raw(const GaugeParameter& delta, const AOmega& xi) {
  const std::size_t n = xi.algebra().nilpotency();
  auto e = getzler_raw(delta, xi, n);
  AOmega out = xi;
  for (std::size_t k = 1; k < e.size(); ++k) out -= (Scalar(1) / factorial(static_cast<unsigned>(k))) * e[k];
  return out;
}

}  // namespace

std::vector<AOmega> getzler_e(const GaugeParameter& delta, const MCElement& xi, std::size_t kmax) {
  if (!xi.verified()) throw NotMaurerCartan("getzler_e requires a verified MC element");
  return getzler_raw(delta, xi.value(), kmax);
}

MCElement gauge_act(const GaugeParameter& delta, const MCElement& xi) {
  if (!xi.verified()) throw NotMaurerCartan("gauge_act requires a verified MC element");
  MCElement out(act_raw(delta, xi.value()));
  if (!is_mc(out)) throw InternalInconsistency("gauge action produced a non-MC element");
  return out.certify();
}

GaugeSolveResult gauge_solve(const MCElement& xi, const MCElement& eta, GaugeMode mode) {
  if (!xi.verified() || !eta.verified()) throw NotMaurerCartan("gauge_solve requires verified MC elements");
  require_same(xi.value(), eta.value());
  const auto& pair = xi.pair();
  const auto& alg = xi.algebra();
  const auto gens = mode_generators(pair, mode);
  std::vector<Vector> cols;
  for (const auto& g : gens) cols.push_back(ext_b1(pair, g).coeffs());
  const std::size_t dim1 = pair.omega_dim(1);
  const Matrix system = cols.empty() ? Matrix(dim1, 0) : Matrix::from_columns(cols, dim1);

  GaugeSolveResult res;
  std::vector<Matrix> parts(alg.dim(), Matrix(pair.dim(), pair.dim()));
  for (std::size_t k = 1; k <= alg.nilpotency(); ++k) {
    GaugeParameter delta(pair, alg, parts, mode);
    AOmega residual = eta.value() - act_raw(delta, xi.value());
    for (std::size_t a = 1; a < alg.dim(); ++a) {
      if (alg.degree(a) != k) continue;
      Vector rhs = residual.part(a).coeffs();
      for (auto& c : rhs) c = -c;
      std::optional<Vector> sol;
      if (is_zero(rhs)) sol = Vector(gens.size());
      else if (!gens.empty()) sol = solve(system, rhs);
      if (!sol) {
        res.status = k == 1 ? GaugeSolveResult::Status::not_equivalent : GaugeSolveResult::Status::not_found_at_order;
        res.order = k;
        return res;
      }
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (sgn((*sol)[g]) != 0) parts[a] += (*sol)[g] * gens[g];
    }
  }
  GaugeParameter delta(pair, alg, std::move(parts), mode);
  if (!(gauge_act(delta, xi) == eta)) {
    res.status = GaugeSolveResult::Status::not_found_at_order;
    res.order = alg.nilpotency() + 1;
    return res;
  }
  res.status = GaugeSolveResult::Status::found;
  res.order = alg.nilpotency();
  res.witness = std::move(delta);
  return res;
}

ExtendResult mc_extend(const AOmega& xi, std::size_t k) {
  if (xi.degree() != 1 || !xi.part(0).is_zero()) throw DegreeMismatch("mc_extend: xi must lie in Omega^1 (x) m");
  const auto& pair = xi.pair();
  const auto& alg = xi.algebra();
  AOmega residual = mc_residual(xi);
  if (!residual.vanishes_below(k)) throw NotMaurerCartan("mc_extend: xi is not Maurer-Cartan modulo m^k");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < pair.omega_dim(1); ++i) {
    Vector e(pair.omega_dim(1));
    e[i] = 1;
    cols.push_back(d_ce(OmegaElement(pair, 1, std::move(e))).coeffs());
  }
  const std::size_t dim2 = pair.omega_dim(2);
  ExtendResult out;
  AOmega next = xi;
  for (std::size_t a = 1; a < alg.dim(); ++a) {
    if (alg.degree(a) != k) continue;
    const auto& o = residual.part(a);
    if (o.is_zero()) continue;
    Vector rhs = o.coeffs();
    for (auto& c : rhs) c = -c;
    std::optional<Vector> sol;
    if (dim2 > 0 && !cols.empty()) sol = solve(Matrix::from_columns(cols, dim2), rhs);
    if (!sol) {
      out.obstruction = Obstruction{a, o};
      return out;
    }
    next.part(a) += OmegaElement(pair, 1, std::move(*sol));
  }
  out.extended = std::move(next);
  return out;
}

MCElement mc_push(const ArtinMorphism& theta, const MCElement& xi) {
  if (!(theta.source() == xi.algebra())) throw AlgebraMismatch("mc_push: element is not over the morphism source");
  const auto& tgt = theta.target();
  AOmega out(xi.pair(), tgt, 1);
  for (std::size_t a = 0; a < xi.algebra().dim(); ++a) {
    const auto& part = xi.value().part(a);
    if (part.is_zero()) continue;
    for (std::size_t b = 0; b < tgt.dim(); ++b)
      if (sgn(theta.matrix()(b, a)) != 0) out.part(b) += theta.matrix()(b, a) * part;
  }
  return MCElement(std::move(out)).certify();
}

GaugeParameter gauge_push(const ArtinMorphism& theta, const GaugeParameter& delta) {
  if (!(theta.source() == delta.algebra())) throw AlgebraMismatch("gauge_push: parameter is not over the morphism source");
  const auto& tgt = theta.target();
  const std::size_t n = delta.pair().dim();
  std::vector<Matrix> parts(tgt.dim(), Matrix(n, n));
  for (std::size_t a = 0; a < delta.algebra().dim(); ++a)
    for (std::size_t b = 0; b < tgt.dim(); ++b)
      if (sgn(theta.matrix()(b, a)) != 0) parts[b] += theta.matrix()(b, a) * delta.part(a);
  return {delta.pair(), tgt, std::move(parts), delta.mode()};
}

}  // namespace liepair
