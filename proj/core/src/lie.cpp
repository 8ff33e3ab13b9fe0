#include <liepair/errors.hpp>
#include <liepair/lie.hpp>

#include <sstream>

namespace liepair {

std::string LieReport::message() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "axiom '" << axiom << "' violated";
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

namespace {

Vector basis_bracket(const Tensor3& f, std::size_t i, std::size_t j) {
  Vector v(f.dim());
  for (std::size_t k = 0; k < f.dim(); ++k) v[k] = f(i, j, k);
  return v;
}

Vector bracket_raw(const Tensor3& f, const Vector& u, const Vector& v) {
  const std::size_t n = f.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      Scalar c = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(f(i, j, k)) != 0) out[k] += c * f(i, j, k);
    }
  }
  return out;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

LieReport validate_lie(const Tensor3& f) {
  LieReport rep;
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (f(i, j, k) != -f(j, i, k)) {
          rep.axiom = "antisymmetry";
          rep.witness = {i, j};
          return rep;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto a = bracket_raw(f, unit(n, i), basis_bracket(f, j, k));
        auto b = bracket_raw(f, unit(n, j), basis_bracket(f, k, i));
        auto c = bracket_raw(f, unit(n, k), basis_bracket(f, i, j));
        for (std::size_t x = 0; x < n; ++x)
          if (sgn(a[x] + b[x] + c[x]) != 0) {
            rep.axiom = "jacobi";
            rep.witness = {i, j, k};
            return rep;
          }
      }
  rep.ok = true;
  return rep;
}

LieAlgebra LieAlgebra::from_constants(std::vector<std::string> labels, const Tensor3& constants) {
  if (labels.size() != constants.dim()) throw InvalidStructure("lie: label count does not match dimension");
  if (constants.dim() == 0) throw InvalidStructure("lie: empty algebra");
  auto rep = validate_lie(constants);
  if (!rep.ok) throw InvalidStructure("lie: " + rep.message());
  return {std::move(labels), constants};
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const { return bracket_raw(f_, u, v); }

AVector LieAlgebra::bracket(const ArtinAlgebra& alg, const AVector& u, const AVector& v) const {
  AVector out = zero_avector(alg, dim());
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (is_zero(u[a])) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      auto terms = alg.product(a, b);
      if (terms.empty() || is_zero(v[b])) continue;
      auto w = bracket(u[a], v[b]);
      for (const auto& t : terms)
        for (std::size_t k = 0; k < w.size(); ++k)
          if (sgn(w[k]) != 0) out[t.index][k] += t.coeff * w[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& u) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    auto col = bracket(u, unit(dim(), j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& basis, std::vector<std::string> labels) const {
  auto inv = inverse(basis);
  if (!inv || basis.rows() != dim()) throw InvalidStructure("change_basis: basis matrix is singular");
  const std::size_t n = dim();
  Tensor3 g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = inv->apply(bracket(basis.column(i), basis.column(j)));
      for (std::size_t k = 0; k < n; ++k) g(i, j, k) = w[k];
    }
  return from_constants(std::move(labels), g);
}

namespace {

// Leibniz defect D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j].
Vector leibniz_defect(const LieAlgebra& lie, const Matrix& m, std::size_t i, std::size_t j) {
  const std::size_t n = lie.dim();
  auto lhs = m.apply(lie.bracket(unit(n, i), unit(n, j)));
  auto a = lie.bracket(m.column(i), unit(n, j));
  auto b = lie.bracket(unit(n, i), m.column(j));
  for (std::size_t k = 0; k < n; ++k) lhs[k] -= a[k] + b[k];
  return lhs;
}

}  // namespace

bool Derivation::satisfies_leibniz(const LieAlgebra& lie, const Matrix& m) {
  if (m.rows() != lie.dim() || m.cols() != lie.dim()) return false;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      if (!is_zero(leibniz_defect(lie, m, i, j))) return false;
  return true;
}

Derivation::Derivation(const LieAlgebra& lie, Matrix m) : m_(std::move(m)) {
  if (m_.rows() != lie.dim() || m_.cols() != lie.dim()) throw NotADerivation("derivation: wrong shape");
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      if (!is_zero(leibniz_defect(lie, m_, i, j)))
        throw NotADerivation("Leibniz rule fails on (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

std::vector<Derivation> derivation_space(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  const auto& f = lie.constants();
  // Unknown D(x, y) sits at column x * n + y.
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (std::size_t c = 0; c < n; ++c) {
          row[k * n + c] += f(a, b, c);   // D([b_a, b_b])_k
          row[c * n + a] -= f(c, b, k);   // [D b_a, b_b]_k
          row[c * n + b] -= f(a, c, k);   // [b_a, D b_b]_k
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Vector> kernel;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) kernel.push_back(unit(n * n, i));
  } else {
    kernel = nullspace(Matrix::from_rows(rows, n * n));
  }
  if (!kernel.empty()) kernel = row_space(kernel, n * n);
  std::vector<Derivation> out;
  for (const auto& v : kernel) {
    Matrix m(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) m(x, y) = v[x * n + y];
    out.emplace_back(lie, std::move(m));
  }
  return out;
}

Derivation inner_derivation(const LieAlgebra& lie, const Vector& u) {
  if (u.size() != lie.dim()) throw DegreeMismatch("inner_derivation: vector length mismatch");
  return {lie, lie.ad(u)};
}

struct LiePair::Data {
  std::string name;
  LieAlgebra lie;
  std::size_t r = 0;
  std::size_t q = 0;
  std::vector<Matrix> bott;
  std::vector<Derivation> derivations;
  std::vector<Matrix> inner;
  std::vector<Matrix> complement;
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  // by degree 0..r
  std::vector<std::size_t> mask_index;                        // bitmask -> position within its degree
};

LiePair LiePair::make(LieAlgebra lie, std::size_t rank, std::string name) {
  const std::size_t n = lie.dim();
  if (rank == 0 || rank >= n) throw InvalidStructure("pair: subalgebra rank must satisfy 0 < r < n");
  if (rank > 20) throw InvalidStructure("pair: subalgebra rank above 20 is not supported");
  const auto& f = lie.constants();
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      for (std::size_t k = rank; k < n; ++k)
        if (sgn(f(i, j, k)) != 0)
          throw NotASubalgebra("pair: [" + lie.labels()[i] + "," + lie.labels()[j] + "] leaves the subalgebra");

  auto d = std::make_shared<Data>(Data{std::move(name), lie, rank, n - rank, {}, {}, {}, {}, {}, {}});
  for (std::size_t i = 0; i < rank; ++i) {
    Matrix nabla(d->q, d->q);
    for (std::size_t b = 0; b < d->q; ++b)
      for (std::size_t c = 0; c < d->q; ++c) nabla(c, b) = f(i, rank + b, rank + c);
    d->bott.push_back(std::move(nabla));
  }
  d->derivations = derivation_space(lie);
  for (std::size_t i = 0; i < n; ++i) d->inner.push_back(lie.ad(unit(n, i)));
  for (std::size_t b = 0; b < d->q; ++b) d->complement.push_back(lie.ad(unit(n, rank + b)));

  d->tuples.resize(rank + 1);
  d->mask_index.assign(std::size_t{1} << rank, 0);
  for (std::size_t k = 0; k <= rank; ++k) {
    std::vector<std::size_t> t(k);
    auto gen = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == k) {
        std::size_t mask = 0;
        for (auto x : t) mask |= std::size_t{1} << x;
        d->mask_index[mask] = d->tuples[k].size();
        d->tuples[k].push_back(t);
        return;
      }
      for (std::size_t x = start; x < rank; ++x) {
        t[pos] = x;
        self(self, pos + 1, x + 1);
      }
    };
    gen(gen, 0, 0);
  }
  return LiePair(std::move(d));
}

const std::string& LiePair::name() const { return d_->name; }
const LieAlgebra& LiePair::lie() const { return d_->lie; }
std::size_t LiePair::dim() const { return d_->lie.dim(); }
std::size_t LiePair::rank() const { return d_->r; }
std::size_t LiePair::quotient_dim() const { return d_->q; }
const Matrix& LiePair::bott(std::size_t i) const { return d_->bott.at(i); }
const std::vector<Derivation>& LiePair::derivations() const { return d_->derivations; }
const std::vector<Matrix>& LiePair::inner_derivations() const { return d_->inner; }
const std::vector<Matrix>& LiePair::complement_derivations() const { return d_->complement; }

const std::vector<std::vector<std::size_t>>& LiePair::tuples(std::size_t k) const {
  static const std::vector<std::vector<std::size_t>> empty;
  return k < d_->tuples.size() ? d_->tuples[k] : empty;
}

std::size_t LiePair::tuple_index(const std::vector<std::size_t>& sorted) const {
  std::size_t mask = 0;
  for (auto x : sorted) mask |= std::size_t{1} << x;
  return d_->mask_index[mask];
}

Vector LiePair::include(const Vector& a) const {
  Vector v(dim());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = a[i];
  return v;
}

Vector LiePair::split(const Vector& b) const {
  Vector v(dim());
  for (std::size_t i = 0; i < quotient_dim(); ++i) v[rank() + i] = b[i];
  return v;
}

Vector LiePair::project_a(const Vector& v) const { return Vector(v.begin(), v.begin() + static_cast<long>(rank())); }

Vector LiePair::project_b(const Vector& v) const { return Vector(v.begin() + static_cast<long>(rank()), v.end()); }

bool operator==(const LiePair& a, const LiePair& b) {
  return a.d_ == b.d_ || (a.d_->r == b.d_->r && a.d_->lie.constants() == b.d_->lie.constants());
}

bool is_matched(const LiePair& pair) {
  const auto& f = pair.lie().constants();
  const std::size_t n = pair.dim(), r = pair.rank();
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (sgn(f(i, j, k)) != 0) return false;
  return true;
}

}  // namespace liepair
