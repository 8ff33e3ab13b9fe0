#include <liepair/errors.hpp>
#include <liepair/omega.hpp>

#include <algorithm>

namespace liepair {

OmegaElement::OmegaElement(LiePair pair, std::size_t degree)
    : pair_(std::move(pair)), degree_(degree), coeffs_(pair_.omega_dim(degree)) {}

OmegaElement::OmegaElement(LiePair pair, std::size_t degree, Vector coeffs)
    : pair_(std::move(pair)), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != pair_.omega_dim(degree_)) throw DegreeMismatch("omega: coefficient count does not match degree");
}

OmegaElement OmegaElement::from_matrix(const LiePair& pair, const Matrix& m) {
  if (m.rows() != pair.quotient_dim() || m.cols() != pair.rank()) throw DegreeMismatch("omega: matrix must be q x r");
  OmegaElement x(pair, 1);
  for (std::size_t i = 0; i < pair.rank(); ++i)
    for (std::size_t b = 0; b < pair.quotient_dim(); ++b) x.at(i, b) = m(b, i);
  return x;
}

Matrix OmegaElement::to_matrix() const {
  if (degree_ != 1) throw DegreeMismatch("omega: to_matrix needs degree 1");
  Matrix m(pair_.quotient_dim(), pair_.rank());
  for (std::size_t i = 0; i < pair_.rank(); ++i)
    for (std::size_t b = 0; b < pair_.quotient_dim(); ++b) m(b, i) = at(i, b);
  return m;
}

Vector OmegaElement::eval(std::span<const std::size_t> indices) const {
  const std::size_t q = pair_.quotient_dim();
  if (indices.size() != degree_) throw DegreeMismatch("omega: wrong number of arguments");
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  bool odd = false;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      odd = !odd;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return Vector(q);
  for (auto x : idx)
    if (x >= pair_.rank()) throw DegreeMismatch("omega: argument index out of range");
  const std::size_t t = pair_.tuple_index(idx);
  Vector out(coeffs_.begin() + static_cast<long>(t * q), coeffs_.begin() + static_cast<long>((t + 1) * q));
  if (odd)
    for (auto& c : out) c = -c;
  return out;
}

Vector OmegaElement::eval_first(const Vector& v, std::span<const std::size_t> rest) const {
  const std::size_t q = pair_.quotient_dim();
  Vector out(q);
  std::vector<std::size_t> idx(rest.size() + 1);
  std::copy(rest.begin(), rest.end(), idx.begin() + 1);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    idx[0] = c;
    auto w = eval(idx);
    for (std::size_t b = 0; b < q; ++b) out[b] += v[c] * w[b];
  }
  return out;
}

namespace {

void check_same(const OmegaElement& a, const OmegaElement& b) {
  if (!(a.pair() == b.pair())) throw AlgebraMismatch("omega: elements of different pairs");
  if (a.degree() != b.degree()) throw DegreeMismatch("omega: degree mismatch");
}

void add_into(Vector& acc, const Vector& v, const Scalar& s) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) acc[i] += s * v[i];
}

std::vector<std::size_t> without(const std::vector<std::size_t>& t, std::size_t p) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != p) r.push_back(t[i]);
  return r;
}

void store(OmegaElement& out, std::size_t tuple, const Vector& v) {
  for (std::size_t b = 0; b < v.size(); ++b) out.at(tuple, b) = v[b];
}

}  // namespace

OmegaElement& OmegaElement::operator+=(const OmegaElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

OmegaElement& OmegaElement::operator-=(const OmegaElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

OmegaElement& OmegaElement::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const OmegaElement& a, const OmegaElement& b) {
  return a.pair_ == b.pair_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

OmegaElement d_ce(const OmegaElement& x) {
  const auto& pair = x.pair();
  const std::size_t k = x.degree(), r = pair.rank();
  const auto& f = pair.lie().constants();
  OmegaElement out(pair, k + 1);
  const auto& tuples = pair.tuples(k + 1);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const auto& t = tuples[ti];
    Vector acc(pair.quotient_dim());
    for (std::size_t p = 0; p <= k; ++p) {
      auto v = pair.bott(t[p]).apply(x.eval(without(t, p)));
      add_into(acc, v, p % 2 ? Scalar(-1) : Scalar(1));
    }
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t s = p + 1; s <= k; ++s) {
        Vector br(r);
        for (std::size_t c = 0; c < r; ++c) br[c] = f(t[p], t[s], c);
        if (is_zero(br)) continue;
        auto rest = without(without(t, s), p);
        add_into(acc, x.eval_first(br, rest), (p + s) % 2 ? Scalar(-1) : Scalar(1));
      }
    store(out, ti, acc);
  }
  return out;
}

namespace {

struct Deg1 {
  const LiePair& pair;
  Vector j_of(const OmegaElement& x, std::size_t i) const { return pair.split(x.eval(std::vector<std::size_t>{i})); }
  Vector e(std::size_t i) const {
    Vector v(pair.dim());
    v[i] = 1;
    return v;
  }
  Vector br(const Vector& u, const Vector& v) const { return pair.lie().bracket(u, v); }
  Vector apply(const OmegaElement& x, const Vector& a) const { return x.eval_first(a, {}); }
};

void require_deg1(const OmegaElement& x) {
  if (x.degree() != 1) throw DegreeMismatch("bracket expects degree-1 arguments");
}

}  // namespace

OmegaElement b2_deg1(const OmegaElement& xi, const OmegaElement& eta) {
  require_deg1(xi);
  require_deg1(eta);
  check_same(xi, eta);
  const auto& pair = xi.pair();
  Deg1 h{pair};
  OmegaElement out(pair, 2);
  const auto& tuples = pair.tuples(2);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::size_t i = tuples[ti][0], s = tuples[ti][1];
    Vector acc = pair.project_b(h.br(h.j_of(xi, i), h.j_of(eta, s)));
    add_into(acc, pair.project_b(h.br(h.j_of(eta, i), h.j_of(xi, s))), 1);
    add_into(acc, h.apply(xi, pair.project_a(h.br(h.j_of(eta, i), h.e(s)))), -1);
    add_into(acc, h.apply(eta, pair.project_a(h.br(h.j_of(xi, i), h.e(s)))), -1);
    add_into(acc, h.apply(xi, pair.project_a(h.br(h.e(i), h.j_of(eta, s)))), -1);
    add_into(acc, h.apply(eta, pair.project_a(h.br(h.e(i), h.j_of(xi, s)))), -1);
    store(out, ti, acc);
  }
  return out;
}

OmegaElement b3_deg1(const OmegaElement& xi, const OmegaElement& eta, const OmegaElement& zeta) {
  require_deg1(xi);
  require_deg1(eta);
  require_deg1(zeta);
  check_same(xi, eta);
  check_same(xi, zeta);
  const auto& pair = xi.pair();
  Deg1 h{pair};
  const OmegaElement* args[3] = {&xi, &eta, &zeta};
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  OmegaElement out(pair, 2);
  const auto& tuples = pair.tuples(2);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const std::size_t i = tuples[ti][0], s = tuples[ti][1];
    Vector acc(pair.quotient_dim());
    for (const auto& p : perms) {
      auto a = pair.project_a(h.br(h.j_of(*args[p[1]], i), h.j_of(*args[p[2]], s)));
      add_into(acc, h.apply(*args[p[0]], a), -1);
    }
    store(out, ti, acc);
  }
  return out;
}

OmegaElement ext_b1(const LiePair& pair, const Matrix& delta) {
  if (delta.rows() != pair.dim() || delta.cols() != pair.dim()) throw DegreeMismatch("ext_b1: derivation shape");
  OmegaElement out(pair, 1);
  for (std::size_t i = 0; i < pair.rank(); ++i)
    for (std::size_t b = 0; b < pair.quotient_dim(); ++b) out.at(i, b) = -delta(pair.rank() + b, i);
  return out;
}

OmegaElement ext_b2(const Matrix& delta, const OmegaElement& x) {
  const auto& pair = x.pair();
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  if (delta.rows() != pair.dim() || delta.cols() != pair.dim()) throw DegreeMismatch("ext_b2: derivation shape");
  OmegaElement out(pair, x.degree());
  const auto& tuples = pair.tuples(x.degree());
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const auto& t = tuples[ti];
    auto xt = x.eval(t);
    Vector acc(q);
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        if (sgn(xt[c]) != 0) acc[b] += delta(r + b, r + c) * xt[c];
    for (std::size_t p = 0; p < t.size(); ++p) {
      Vector col(r);
      for (std::size_t a = 0; a < r; ++a) col[a] = delta(a, t[p]);
      add_into(acc, x.eval_first(col, without(t, p)), p % 2 ? Scalar(1) : Scalar(-1));
    }
    store(out, ti, acc);
  }
  return out;
}

Matrix ext_b2_der(const Matrix& d1, const Matrix& d2) { return d1 * d2 - d2 * d1; }

namespace {

// Calls fn(first, second, sign) for every shuffle of positions 0..m-1 into
// an increasing block of size p followed by the increasing remainder.
template <class Fn>
void for_each_shuffle(std::size_t m, std::size_t p, Fn&& fn) {
  std::vector<std::size_t> first(p);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == p) {
      std::vector<std::size_t> second;
      std::size_t inversions = 0;
      for (std::size_t x = 0, k = 0; x < m; ++x) {
        if (k < p && first[k] == x) {
          ++k;
        } else {
          second.push_back(x);
          inversions += p - k;
        }
      }
      fn(first, second, inversions % 2 ? -1 : 1);
      return;
    }
    for (std::size_t x = start; x + (p - pos) <= m; ++x) {
      first[pos] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& t, const std::vector<std::size_t>& pos) {
  std::vector<std::size_t> r;
  r.reserve(pos.size());
  for (auto p : pos) r.push_back(t[p]);
  return r;
}

}  // namespace

OmegaElement ext_b3(const Matrix& delta, const OmegaElement& x, const OmegaElement& y) {
  if (!(x.pair() == y.pair())) throw AlgebraMismatch("ext_b3: elements of different pairs");
  const auto& pair = x.pair();
  const std::size_t r = pair.rank(), q = pair.quotient_dim();
  const std::size_t p = x.degree(), qd = y.degree();
  if (p == 0 || qd == 0) throw DegreeMismatch("ext_b3: arguments must have degree >= 1");
  if (delta.rows() != pair.dim() || delta.cols() != pair.dim()) throw DegreeMismatch("ext_b3: derivation shape");
  const std::size_t m = p + qd - 1;
  OmegaElement out(pair, m);
  auto phi = [&](const Vector& b) {
    Vector a(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < q; ++c)
        if (sgn(b[c]) != 0) a[i] += delta(i, r + c) * b[c];
    return a;
  };
  const Scalar lead = (p + 1) % 2 ? Scalar(-1) : Scalar(1);
  const auto& tuples = pair.tuples(m);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const auto& t = tuples[ti];
    Vector acc(q);
    for_each_shuffle(m, p, [&](const auto& s1, const auto& s2, int sign) {
      auto v = y.eval_first(phi(x.eval(pick(t, s1))), pick(t, s2));
      add_into(acc, v, lead * sign);
    });
    for_each_shuffle(m, p - 1, [&](const auto& s1, const auto& s2, int sign) {
      auto v = x.eval_first(phi(y.eval(pick(t, s2))), pick(t, s1));
      add_into(acc, v, sign);
    });
    store(out, ti, acc);
  }
  return out;
}

OmegaElement h_zero_differential(const LiePair& pair, const HZero& h) {
  return ext_b1(pair, h.derivation) + d_ce(h.section);
}

AOmega::AOmega(LiePair pair, ArtinAlgebra alg, std::size_t degree)
    : pair_(pair), alg_(std::move(alg)), degree_(degree), parts_(alg_.dim(), OmegaElement(pair, degree)) {}

AOmega::AOmega(ArtinAlgebra alg, std::vector<OmegaElement> parts)
    : pair_(parts.at(0).pair()), alg_(std::move(alg)), degree_(parts.at(0).degree()), parts_(std::move(parts)) {
  if (parts_.size() != alg_.dim()) throw DegreeMismatch("AOmega: part count does not match algebra dimension");
  for (const auto& p : parts_) check_same(parts_[0], p);
}

AOmega AOmega::from_amatrix(const LiePair& pair, const AMatrix& m) {
  std::vector<OmegaElement> parts;
  for (const auto& b : m.blocks()) parts.push_back(OmegaElement::from_matrix(pair, b));
  return {m.algebra(), std::move(parts)};
}

AMatrix AOmega::to_amatrix() const {
  AMatrix m(alg_, pair_.quotient_dim(), pair_.rank());
  for (std::size_t a = 0; a < parts_.size(); ++a) m.block(a) = parts_[a].to_matrix();
  return m;
}

bool AOmega::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.is_zero(); });
}

bool AOmega::vanishes_below(std::size_t k) const {
  for (std::size_t a = 0; a < parts_.size(); ++a)
    if (alg_.degree(a) < k && !parts_[a].is_zero()) return false;
  return true;
}

namespace {
void check_same(const AOmega& a, const AOmega& b) {
  if (!(a.algebra() == b.algebra()) || !(a.pair() == b.pair())) throw AlgebraMismatch("AOmega: mismatched algebra or pair");
  if (a.degree() != b.degree()) throw DegreeMismatch("AOmega: degree mismatch");
}
}  // namespace

AOmega& AOmega::operator+=(const AOmega& o) {
  check_same(*this, o);
  for (std::size_t a = 0; a < parts_.size(); ++a) parts_[a] += o.parts_[a];
  return *this;
}

AOmega& AOmega::operator-=(const AOmega& o) {
  check_same(*this, o);
  for (std::size_t a = 0; a < parts_.size(); ++a) parts_[a] -= o.parts_[a];
  return *this;
}

AOmega& AOmega::operator*=(const Scalar& s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

bool operator==(const AOmega& a, const AOmega& b) {
  return a.alg_ == b.alg_ && a.pair_ == b.pair_ && a.degree_ == b.degree_ && a.parts_ == b.parts_;
}

}  // namespace liepair
