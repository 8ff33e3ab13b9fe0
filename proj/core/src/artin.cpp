#include <liepair/artin.hpp>
#include <liepair/errors.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liepair {

struct ArtinAlgebra::Data {
  std::string name;
  std::vector<std::string> labels;
  Tensor3 table;
  std::vector<std::vector<ProductTerm>> products;  // n*n sparse rows of the table
  std::size_t nilpotency = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Vector>> powers;  // powers[k] = basis of m^k, k = 1..N
};

namespace {

Vector product_vector(const Tensor3& t, std::size_t i, std::size_t j) {
  Vector v(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) v[k] = t(i, j, k);
  return v;
}

Vector multiply_raw(const Tensor3& t, const Vector& a, const Vector& b) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(t(i, j, k)) != 0) out[k] += ab * t(i, j, k);
    }
  }
  return out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Bases of m^1, m^2, ... until zero or stabilization.
struct PowerScan {
  std::vector<std::vector<Vector>> powers;  // index k -> basis of m^k (index 0 unused)
  bool nilpotent = false;
};

PowerScan scan_powers(const Tensor3& t) {
  const std::size_t n = t.dim();
  PowerScan scan;
  scan.powers.emplace_back();
  std::vector<Vector> current;
  for (std::size_t i = 1; i < n; ++i) current.push_back(unit_vector(n, i));
  current = current.empty() ? current : row_space(current, n);
  while (!current.empty()) {
    scan.powers.push_back(current);
    std::vector<Vector> next;
    for (const auto& x : current)
      for (std::size_t j = 1; j < n; ++j) {
        auto p = multiply_raw(t, x, unit_vector(n, j));
        if (!is_zero(p)) next.push_back(std::move(p));
      }
    next = next.empty() ? next : row_space(next, n);
    if (next.size() == current.size()) return scan;  // stabilized, not nilpotent
    current = std::move(next);
  }
  scan.nilpotent = true;
  return scan;
}

}  // namespace

std::string ArtinReport::message() const {
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

ArtinReport validate_artin(const Tensor3& t) {
  ArtinReport rep;
  const std::size_t n = t.dim();
  auto fail = [&](std::string axiom, std::vector<std::size_t> w) {
    rep.ok = false;
    rep.axiom = std::move(axiom);
    rep.witness = std::move(w);
    return rep;
  };
  if (n == 0) return fail("shape", {});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar expect = i == k ? 1 : 0;
      if (t(0, i, k) != expect || t(i, 0, k) != expect) return fail("unital", {0, i});
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k) != t(j, i, k)) return fail("commutative", {i, j});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ij = product_vector(t, i, j);
      for (std::size_t k = 0; k < n; ++k) {
        auto left = multiply_raw(t, ij, unit_vector(n, k));
        auto right = multiply_raw(t, unit_vector(n, i), product_vector(t, j, k));
        if (left != right) return fail("associative", {i, j, k});
      }
    }

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (sgn(t(i, j, 0)) != 0) return fail("ideal", {i, j});

  auto scan = scan_powers(t);
  if (!scan.nilpotent) return fail("nilpotent", {scan.powers.size() - 1});

  rep.ok = true;
  rep.nilpotency = scan.powers.size() - 1;
  rep.degrees.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    auto e = unit_vector(n, i);
    std::size_t d = 1;
    while (d + 1 <= rep.nilpotency && in_span(scan.powers[d + 1], e)) ++d;
    rep.degrees[i] = d;
  }
  rep.adapted = true;
  for (std::size_t k = 1; k <= rep.nilpotency; ++k) {
    auto count = static_cast<std::size_t>(
        std::count_if(rep.degrees.begin() + 1, rep.degrees.end(), [k](std::size_t d) { return d >= k; }));
    if (count != scan.powers[k].size()) rep.adapted = false;
  }
  return rep;
}

namespace {

std::string combination_label(const std::vector<std::string>& labels, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!first) os << (sgn(v[i]) > 0 ? "+" : "");
    if (v[i] == -1)
      os << "-";
    else if (v[i] != 1)
      os << format_scalar(v[i]) << "*";
    os << labels[i];
    first = false;
  }
  return os.str();
}

}  // namespace

ArtinAlgebra ArtinAlgebra::from_table(std::vector<std::string> labels, const Tensor3& table, std::string name) {
  const std::size_t n = table.dim();
  if (labels.size() != n) throw InvalidStructure("artin: label count does not match table dimension");
  auto rep = validate_artin(table);
  if (!rep.ok) throw InvalidStructure("artin: " + rep.message());

  // New basis as coefficient vectors in the old basis, deepest filtration level first.
  auto scan = scan_powers(table);
  std::vector<Vector> chosen;
  std::vector<std::string> chosen_labels;
  std::vector<std::size_t> chosen_degree;
  for (std::size_t k = rep.nilpotency; k >= 1; --k) {
    std::vector<Vector> candidates;
    for (std::size_t i = 1; i < n; ++i)
      if (rep.degrees[i] == k) candidates.push_back(unit_vector(n, i));
    for (const auto& v : scan.powers[k]) candidates.push_back(v);
    for (const auto& c : candidates) {
      if (chosen.size() >= scan.powers[k].size()) break;
      if (in_span(chosen, c)) continue;
      chosen.push_back(c);
      std::size_t single = n;
      for (std::size_t i = 0; i < n; ++i)
        if (c[i] == 1 && std::count_if(c.begin(), c.end(), [](const Scalar& x) { return sgn(x) != 0; }) == 1)
          single = i;
      chosen_labels.push_back(single < n ? labels[single] : combination_label(labels, c));
      chosen_degree.push_back(k);
    }
  }
  // Sort by ascending degree; keep original index order within a degree when possible.
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_index = [&](const Vector& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(v[i]) != 0) return i;
    return n;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (chosen_degree[a] != chosen_degree[b]) return chosen_degree[a] < chosen_degree[b];
    return first_index(chosen[a]) < first_index(chosen[b]);
  });

  std::vector<Vector> basis{unit_vector(n, 0)};
  std::vector<std::string> new_labels{labels[0]};
  std::vector<std::size_t> new_degrees{0};
  for (auto o : order) {
    basis.push_back(chosen[o]);
    new_labels.push_back(chosen_labels[o]);
    new_degrees.push_back(chosen_degree[o]);
  }

  auto change = Matrix::from_columns(basis, n);
  auto to_new = inverse(change);
  if (!to_new) throw InternalInconsistency("artin: adapted basis is singular");

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->labels = std::move(new_labels);
  d->table = Tensor3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto p = to_new->apply(multiply_raw(table, basis[i], basis[j]));
      for (std::size_t k = 0; k < n; ++k) d->table(i, j, k) = p[k];
    }
  d->products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(d->table(i, j, k)) != 0) d->products[i * n + j].push_back({k, d->table(i, j, k)});
  d->nilpotency = rep.nilpotency;
  d->degrees = std::move(new_degrees);
  d->powers = scan_powers(d->table).powers;
  return ArtinAlgebra(std::move(d));
}

ArtinAlgebra ArtinAlgebra::truncated(std::size_t vars, std::size_t degree) {
  if (vars == 0) throw InvalidStructure("truncated algebra needs at least one variable");
  if (degree < 2) throw InvalidStructure("truncation degree must be at least 2");

  // Exponent vectors of total degree < `degree`, degree-lex (t1 before t2).
  std::vector<std::vector<std::size_t>> monomials;
  for (std::size_t total = 0; total < degree; ++total) {
    std::vector<std::size_t> e(vars, 0);
    auto emit = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
      if (pos + 1 == vars) {
        e[pos] = left;
        monomials.push_back(e);
        return;
      }
      for (std::size_t x = left + 1; x-- > 0;) {
        e[pos] = x;
        self(self, pos + 1, left - x);
      }
    };
    emit(emit, 0, total);
  }
  const std::size_t n = monomials.size();
  auto label = [&](const std::vector<std::size_t>& e) {
    std::string s;
    for (std::size_t v = 0; v < vars; ++v) {
      if (e[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars == 1 ? "t" : "t" + std::to_string(v + 1);
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? std::string("1") : s;
  };
  std::vector<std::string> labels;
  for (const auto& m : monomials) labels.push_back(label(m));

  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> sum(vars);
      std::size_t total = 0;
      for (std::size_t v = 0; v < vars; ++v) total += sum[v] = monomials[i][v] + monomials[j][v];
      if (total >= degree) continue;
      auto it = std::find(monomials.begin(), monomials.end(), sum);
      t(i, j, static_cast<std::size_t>(it - monomials.begin())) = 1;
    }

  std::string name;
  if (vars == 1)
    name = degree == 2 ? "dual" : "t^" + std::to_string(degree);
  else if (degree == 2)
    name = "m2x" + std::to_string(vars);
  else
    name = "trunc" + std::to_string(vars) + "d" + std::to_string(degree);
  return from_table(std::move(labels), t, std::move(name));
}

ArtinAlgebra ArtinAlgebra::ground() {
  Tensor3 t(1);
  t(0, 0, 0) = 1;
  return from_table({"1"}, t, "K");
}

std::size_t ArtinAlgebra::dim() const { return d_->labels.size(); }
const std::string& ArtinAlgebra::name() const { return d_->name; }
const std::vector<std::string>& ArtinAlgebra::labels() const { return d_->labels; }
const Tensor3& ArtinAlgebra::table() const { return d_->table; }
std::size_t ArtinAlgebra::nilpotency() const { return d_->nilpotency; }
std::size_t ArtinAlgebra::degree(std::size_t index) const { return d_->degrees.at(index); }

std::span<const ProductTerm> ArtinAlgebra::product(std::size_t i, std::size_t j) const {
  return d_->products[i * dim() + j];
}

Vector ArtinAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& term : product(i, j)) out[term.index] += ab * term.coeff;
    }
  }
  return out;
}

std::vector<Vector> ArtinAlgebra::ideal_power(std::size_t k) const {
  if (k == 0) throw DegreeMismatch("ideal_power: k must be >= 1");
  return k < d_->powers.size() ? d_->powers[k] : std::vector<Vector>{};
}

bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b) {
  return a.d_ == b.d_ || (a.d_->labels == b.d_->labels && a.d_->table == b.d_->table);
}

ArtinElement::ArtinElement(ArtinAlgebra algebra, Vector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.dim()) throw DegreeMismatch("artin element: coefficient count mismatch");
}

ArtinElement ArtinElement::scalar(const ArtinAlgebra& algebra, const Scalar& s) {
  Vector v(algebra.dim());
  v[0] = s;
  return {algebra, std::move(v)};
}

ArtinElement ArtinElement::basis(const ArtinAlgebra& algebra, std::size_t index) {
  return {algebra, unit_vector(algebra.dim(), index)};
}

namespace {
void require_same(const ArtinElement& a, const ArtinElement& b) {
  if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("elements live in different algebras");
}
}  // namespace

ArtinElement operator+(const ArtinElement& a, const ArtinElement& b) {
  require_same(a, b);
  Vector v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
  return {a.algebra_, std::move(v)};
}

ArtinElement operator-(const ArtinElement& a, const ArtinElement& b) {
  require_same(a, b);
  Vector v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs_[i];
  return {a.algebra_, std::move(v)};
}

ArtinElement operator*(const ArtinElement& a, const ArtinElement& b) {
  require_same(a, b);
  return {a.algebra_, a.algebra_.multiply(a.coeffs_, b.coeffs_)};
}

ArtinElement operator*(const Scalar& s, const ArtinElement& a) {
  Vector v = a.coeffs_;
  for (auto& x : v) x *= s;
  return {a.algebra_, std::move(v)};
}

bool operator==(const ArtinElement& a, const ArtinElement& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

Scalar ev(const ArtinElement& a) { return a[0]; }

ArtinElement invert_unit(const ArtinElement& a) {
  const Scalar c = ev(a);
  if (sgn(c) == 0) throw NotAUnit("element has zero evaluation");
  const auto& alg = a.algebra();
  // a = c (1 - u) with u = -(a - c)/c in m; a^{-1} = c^{-1} sum_k u^k.
  Vector u = a.coeffs();
  u[0] = 0;
  for (auto& x : u) x = -x / c;
  Vector term(alg.dim());
  term[0] = 1;
  Vector sum = term;
  for (std::size_t k = 1; k <= alg.nilpotency(); ++k) {
    term = alg.multiply(term, u);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  for (auto& x : sum) x /= c;
  return {alg, std::move(sum)};
}

ArtinMorphism::ArtinMorphism(ArtinAlgebra source, ArtinAlgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const std::size_t n = source_.dim(), m = target_.dim();
  if (matrix_.rows() != m || matrix_.cols() != n) throw InvalidStructure("morphism: matrix shape mismatch");
  for (std::size_t i = 0; i < m; ++i)
    if (matrix_(i, 0) != (i == 0 ? 1 : 0)) throw InvalidStructure("morphism: unit not mapped to unit");
  for (std::size_t j = 1; j < n; ++j)
    if (sgn(matrix_(0, j)) != 0) throw InvalidStructure("morphism: maximal ideal not mapped into maximal ideal");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto lhs = matrix_.apply(source_.multiply(unit_vector(n, i), unit_vector(n, j)));
      auto rhs = target_.multiply(matrix_.column(i), matrix_.column(j));
      if (lhs != rhs)
        throw InvalidStructure("morphism: not multiplicative on basis pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    }
}

ArtinMorphism ArtinMorphism::identity(const ArtinAlgebra& a) { return {a, a, Matrix::identity(a.dim())}; }

ArtinMorphism ArtinMorphism::evaluation(const ArtinAlgebra& a) {
  Matrix m(1, a.dim());
  m(0, 0) = 1;
  return {a, ArtinAlgebra::ground(), std::move(m)};
}

ArtinMorphism ArtinMorphism::by_labels(const ArtinAlgebra& source, const ArtinAlgebra& target) {
  Matrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const auto& l = source.labels()[j];
    auto it = std::find(target.labels().begin(), target.labels().end(), l);
    if (it != target.labels().end()) m(static_cast<std::size_t>(it - target.labels().begin()), j) = 1;
  }
  return {source, target, std::move(m)};
}

ArtinElement morph_apply(const ArtinMorphism& theta, const ArtinElement& a) {
  if (!(a.algebra() == theta.source())) throw AlgebraMismatch("morph_apply: element not in source algebra");
  return {theta.target(), theta.matrix().apply(a.coeffs())};
}

}  // namespace liepair
