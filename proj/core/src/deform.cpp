#include <liepair/deform.hpp>
#include <liepair/errors.hpp>

namespace liepair {

namespace {

AVector column(const AMatrix& m, std::size_t j) {
  AVector out;
  out.reserve(m.blocks().size());
  for (const auto& b : m.blocks()) out.push_back(b.column(j));
  return out;
}

AVector constant(const ArtinAlgebra& alg, const Vector& v) {
  AVector out = zero_avector(alg, v.size());
  out[0] = v;
  return out;
}

AVector project_a(const LiePair& pair, const AVector& v) {
  AVector out;
  for (const auto& x : v) out.push_back(pair.project_a(x));
  return out;
}

Matrix inclusion_matrix(const LiePair& pair) {
  Matrix m(pair.dim(), pair.rank());
  for (std::size_t i = 0; i < pair.rank(); ++i) m(i, i) = 1;
  return m;
}

}  // namespace

AMatrix i_xi(const AOmega& xi) {
  const auto& pair = xi.pair();
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  if (xi.degree() != 1) throw DegreeMismatch("i_xi: degree-1 element expected");
  AMatrix m(xi.algebra(), pair.dim(), r);
  m.block(0) = inclusion_matrix(pair);
  for (std::size_t a = 0; a < xi.algebra().dim(); ++a)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t b = 0; b < q; ++b)
        if (sgn(xi.part(a).at(i, b)) != 0) m.block(a)(r + b, i) += xi.part(a).at(i, b);
  return m;
}

AOmega std_defect(const AOmega& xi) {
  const auto& pair = xi.pair();
  const auto& alg = xi.algebra();
  const AMatrix inc = i_xi(xi);
  AOmega out(pair, alg, 2);
  const auto& tuples = pair.tuples(2);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    auto w = pair.lie().bracket(alg, column(inc, tuples[t][0]), column(inc, tuples[t][1]));
    auto back = inc.apply(project_a(pair, w));
    for (std::size_t a = 0; a < alg.dim(); ++a)
      for (std::size_t b = 0; b < pair.quotient_dim(); ++b)
        out.part(a).at(t, b) = w[a][pair.rank() + b] - back[a][pair.rank() + b];
  }
  return out;
}

bool std_check(const AOmega& xi) {
  const auto& pair = xi.pair();
  const auto& alg = xi.algebra();
  const AMatrix inc = i_xi(xi);
  for (std::size_t i = 0; i < pair.rank(); ++i)
    for (std::size_t s = i + 1; s < pair.rank(); ++s) {
      auto w = pair.lie().bracket(alg, column(inc, i), column(inc, s));
      if (!(inc.apply(project_a(pair, w)) == w)) return false;
    }
  return true;
}

InducedBracket InducedBracket::raw(const AOmega& xi) {
  const auto& pair = xi.pair();
  const auto& alg = xi.algebra();
  const std::size_t r = pair.rank();
  const AMatrix inc = i_xi(xi);
  std::vector<AVector> table(r * r, zero_avector(alg, r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) table[i * r + j] = project_a(pair, pair.lie().bracket(alg, column(inc, i), column(inc, j)));
  return {alg, r, std::move(table)};
}

AVector InducedBracket::bracket(const AVector& u, const AVector& v) const {
  AVector out = zero_avector(alg_, r_);
  for (std::size_t a = 0; a < alg_.dim(); ++a) {
    if (is_zero(u[a])) continue;
    for (std::size_t b = 0; b < alg_.dim(); ++b) {
      if (is_zero(v[b])) continue;
      for (const auto& t : alg_.product(a, b))
        for (std::size_t i = 0; i < r_; ++i) {
          if (sgn(u[a][i]) == 0) continue;
          for (std::size_t j = 0; j < r_; ++j) {
            if (sgn(v[b][j]) == 0) continue;
            const Scalar c = t.coeff * u[a][i] * v[b][j];
            const auto& entry = table_[i * r_ + j];
            for (std::size_t g = 0; g < alg_.dim(); ++g) {
              if (is_zero(entry[g])) continue;
              for (const auto& s : alg_.product(t.index, g))
                for (std::size_t k = 0; k < r_; ++k) out[s.index][k] += c * s.coeff * entry[g][k];
            }
          }
        }
    }
  }
  return out;
}

bool InducedBracket::antisymmetric() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j)
      for (std::size_t g = 0; g < alg_.dim(); ++g)
        for (std::size_t k = 0; k < r_; ++k)
          if (table_[i * r_ + j][g][k] != -table_[j * r_ + i][g][k]) return false;
  return true;
}

std::optional<std::vector<std::size_t>> InducedBracket::jacobi_violation() const {
  auto e = [&](std::size_t i) {
    Vector v(r_);
    v[i] = 1;
    return constant(alg_, v);
  };
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < r_; ++j)
      for (std::size_t k = j + 1; k < r_; ++k) {
        auto a = bracket(e(i), basis_bracket(j, k));
        auto b = bracket(e(j), basis_bracket(k, i));
        auto c = bracket(e(k), basis_bracket(i, j));
        for (std::size_t g = 0; g < alg_.dim(); ++g)
          for (std::size_t x = 0; x < r_; ++x)
            if (sgn(a[g][x] + b[g][x] + c[g][x]) != 0) return std::vector<std::size_t>{i, j, k};
      }
  return std::nullopt;
}

InducedBracket induced_bracket(const AOmega& xi) {
  if (!std_check(xi)) throw NotMaurerCartan("induced_bracket: xi does not define a standard deformation");
  return InducedBracket::raw(xi);
}

bool SmallAutomorphism::preserves_bracket(const LiePair& pair, const AMatrix& map) {
  const auto& alg = map.algebra();
  const auto& lie = pair.lie();
  const std::size_t n = pair.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector ei(n), ej(n);
      ei[i] = 1;
      ej[j] = 1;
      auto lhs = map.apply(constant(alg, lie.bracket(ei, ej)));
      auto rhs = lie.bracket(alg, column(map, i), column(map, j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

SmallAutomorphism::SmallAutomorphism(LiePair pair, AMatrix map) : pair_(std::move(pair)), map_(std::move(map)) {
  if (map_.rows() != pair_.dim() || map_.cols() != pair_.dim()) throw NotSmall("small automorphism: wrong shape");
  if (!(map_.center() == Matrix::identity(pair_.dim()))) throw NotSmall("small automorphism: center is not the identity");
  if (!preserves_bracket(pair_, map_)) throw NotSmall("small automorphism: bracket not preserved");
}

SmallAutomorphism SmallAutomorphism::identity(const LiePair& pair, const ArtinAlgebra& alg) {
  return {pair, AMatrix::identity(alg, pair.dim())};
}

SmallAutomorphism SmallAutomorphism::operator*(const SmallAutomorphism& other) const {
  return {pair_, map_ * other.map_};
}

SmallAutomorphism exp_derivation(const GaugeParameter& delta) {
  const auto& alg = delta.algebra();
  const AMatrix d = delta.to_amatrix();
  AMatrix sum = AMatrix::identity(alg, delta.pair().dim());
  AMatrix term = sum;
  for (std::size_t k = 1; k <= alg.nilpotency(); ++k) {
    term = term * d;
    term *= Scalar(1, static_cast<unsigned long>(k));
    sum += term;
  }
  return {delta.pair(), std::move(sum)};
}

GaugeParameter log_automorphism(const LiePair& pair, const AMatrix& pi, GaugeMode mode) {
  const auto& alg = pi.algebra();
  const std::size_t n = pair.dim();
  if (pi.rows() != n || pi.cols() != n || !(pi.center() == Matrix::identity(n)))
    throw NotSmall("log: center is not the identity");
  const AMatrix x = pi - AMatrix::identity(alg, n);
  AMatrix sum(alg, n, n);
  AMatrix term = AMatrix::identity(alg, n);
  for (std::size_t k = 1; k <= alg.nilpotency(); ++k) {
    term = term * x;
    Scalar c(k % 2 ? 1 : -1, static_cast<unsigned long>(k));
    sum += c * term;
  }
  return {pair, alg, sum.blocks(), mode};
}

GaugeParameter log_automorphism(const SmallAutomorphism& pi, GaugeMode mode) {
  return log_automorphism(pi.pair(), pi.map(), mode);
}

AOmega act_on_sd(const SmallAutomorphism& pi, const AOmega& xi) {
  if (!std_check(xi)) throw NotMaurerCartan("act_on_sd: xi does not define a standard deformation");
  if (!(pi.pair() == xi.pair()) || !(pi.map().algebra() == xi.algebra()))
    throw AlgebraMismatch("act_on_sd: mismatched pair or algebra");
  const auto& pair = xi.pair();
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  const AMatrix p = pi.map() * i_xi(xi);
  const AMatrix top = p.slice(0, r, 0, r);
  const AMatrix out = p.slice(r, q, 0, r) * invert(top);
  AOmega result = AOmega::from_amatrix(pair, out);
  if (!(i_xi(result) * top == p)) throw InternalInconsistency("act_on_sd: commuting square fails");
  if (!std_check(result)) throw InternalInconsistency("act_on_sd: result is not a standard deformation");
  return result;
}

AOmega standard_realization(const LiePair& pair, const AMatrix& inclusion) {
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  if (inclusion.rows() != pair.dim() || inclusion.cols() != r) throw DegreeMismatch("standard_realization: wrong shape");
  if (!(inclusion.center() == inclusion_matrix(pair)))
    throw InvalidStructure("standard_realization: center is not the inclusion");
  const AMatrix iota_a = inclusion.slice(0, r, 0, r);
  const AMatrix iota_b = inclusion.slice(r, q, 0, r);
  AOmega xi = AOmega::from_amatrix(pair, iota_b * invert(iota_a));
  if (!std_check(xi)) throw NotMaurerCartan("standard_realization: image is not bracket-closed");
  return xi;
}

XYSequences xy_sequences(const GaugeParameter& delta, const AOmega& xi, std::size_t kmax) {
  const auto& pair = xi.pair();
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  const AMatrix d = delta.to_amatrix();
  AMatrix cur = i_xi(xi);
  XYSequences out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) cur = d * cur;
    out.x.push_back(cur.slice(0, r, 0, r));
    out.y.push_back(cur.slice(r, q, 0, r));
  }
  return out;
}

bool appendix_check(const GaugeParameter& delta, const MCElement& xi, std::size_t kmax) {
  const auto seq = xy_sequences(delta, xi.value(), kmax);
  const auto e = getzler_e(delta, xi, kmax);
  const auto& pair = xi.pair();
  for (std::size_t k = 0; k <= kmax; ++k) {
    AMatrix rhs(xi.algebra(), pair.quotient_dim(), pair.rank());
    for (std::size_t p = 0; p <= k; ++p)
      rhs += binomial(static_cast<unsigned>(k), static_cast<unsigned>(p)) * (e[p].to_amatrix() * seq.x[k - p]);
    if (!(seq.y[k] == Scalar(-1) * rhs)) return false;
  }
  return true;
}

EquivResult equiv_decide(const MCElement& xi, const MCElement& eta, GaugeMode mode) {
  EquivResult out;
  auto res = gauge_solve(xi, eta, mode);
  out.order = res.order;
  switch (res.status) {
    case GaugeSolveResult::Status::not_equivalent: out.status = EquivResult::Status::not_equivalent; return out;
    case GaugeSolveResult::Status::not_found_at_order: out.status = EquivResult::Status::unknown; return out;
    case GaugeSolveResult::Status::found: break;
  }
  auto pi = exp_derivation(*res.witness);
  if (!(act_on_sd(pi, xi.value()) == eta.value())) throw InternalInconsistency("equiv_decide: witness fails re-check");
  out.status = EquivResult::Status::equivalent;
  out.delta = std::move(res.witness);
  out.witness = std::move(pi);
  return out;
}

}  // namespace liepair
