#include <liepair/cohomology.hpp>
#include <liepair/sampling.hpp>

namespace liepair {

std::size_t Sampler::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

bool Sampler::coin() { return (rng_() & 1U) != 0; }

Scalar Sampler::scalar(bool sparse) {
  if (sparse && coin()) return 0;
  Scalar v(std::uniform_int_distribution<long>(-3, 3)(rng_));
  switch (index(4)) {
    case 0: v /= 2; break;
    case 1: v /= 3; break;
    default: break;
  }
  return v;
}

Vector Sampler::vector(std::size_t n, bool sparse) {
  Vector v(n);
  for (auto& x : v) x = scalar(sparse);
  return v;
}

OmegaElement Sampler::omega(const LiePair& pair, std::size_t k) {
  return {pair, k, vector(pair.omega_dim(k), true)};
}

OmegaElement Sampler::cocycle(const LiePair& pair) {
  const auto d = d_ce_matrix(pair, 1);
  std::vector<Vector> basis;
  if (d.rows() == 0) {
    for (std::size_t i = 0; i < d.cols(); ++i) {
      Vector e(d.cols());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(d);
  }
  Vector v(pair.omega_dim(1));
  for (const auto& b : basis) {
    auto c = scalar(true);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return {pair, 1, std::move(v)};
}

AOmega Sampler::omega_m(const LiePair& pair, const ArtinAlgebra& alg, std::size_t k) {
  AOmega out(pair, alg, k);
  for (std::size_t a = 1; a < alg.dim(); ++a) out.part(a) = omega(pair, k);
  return out;
}

Matrix Sampler::derivation(const LiePair& pair, GaugeMode mode) {
  Matrix m(pair.dim(), pair.dim());
  for (const auto& g : mode_generators(pair, mode)) {
    auto c = scalar(true);
    if (sgn(c) != 0) m += c * g;
  }
  return m;
}

Matrix Sampler::stabilizer_derivation(const LiePair& pair) {
  std::vector<Matrix> gens;
  for (const auto& d : pair.derivations()) gens.push_back(d.matrix());
  std::vector<Vector> cols;
  for (const auto& g : gens) cols.push_back(ext_b1(pair, g).coeffs());
  std::vector<Vector> kernel;
  if (pair.omega_dim(1) == 0 || cols.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Vector e(gens.size());
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(Matrix::from_columns(cols, pair.omega_dim(1)));
  }
  Matrix m(pair.dim(), pair.dim());
  for (const auto& v : kernel) {
    auto c = scalar(true);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (sgn(v[i]) != 0) m += (c * v[i]) * gens[i];
  }
  return m;
}

GaugeParameter Sampler::gauge(const LiePair& pair, const ArtinAlgebra& alg, GaugeMode mode) {
  std::vector<Matrix> parts(alg.dim(), Matrix(pair.dim(), pair.dim()));
  for (std::size_t a = 1; a < alg.dim(); ++a) parts[a] = derivation(pair, mode);
  return {pair, alg, std::move(parts), mode};
}

SmallAutomorphism Sampler::automorphism(const LiePair& pair, const ArtinAlgebra& alg, GaugeMode mode) {
  return exp_derivation(gauge(pair, alg, mode));
}

MCElement Sampler::mc(const LiePair& pair, const ArtinAlgebra& alg) {
  std::optional<AOmega> xi;
  for (int attempt = 0; attempt < 4 && !xi; ++attempt) {
    AOmega cur(pair, alg, 1);
    for (std::size_t a = 1; a < alg.dim(); ++a)
      if (alg.degree(a) == 1) cur.part(a) = cocycle(pair);
    bool ok = true;
    for (std::size_t k = 2; k <= alg.nilpotency() && ok; ++k) {
      auto ext = mc_extend(cur, k);
      if (!ext.extended) {
        ok = false;
        break;
      }
      cur = std::move(*ext.extended);
      for (std::size_t a = 1; a < alg.dim(); ++a)
        if (alg.degree(a) == k && coin()) cur.part(a) += cocycle(pair);
    }
    if (ok) xi = std::move(cur);
  }
  MCElement out = MCElement(xi ? std::move(*xi) : AOmega(pair, alg, 1)).certify();
  if (!xi || coin()) out = gauge_act(gauge(pair, alg), out);
  return out;
}

}  // namespace liepair
