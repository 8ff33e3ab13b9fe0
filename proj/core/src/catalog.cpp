#include <liepair/catalog.hpp>
#include <liepair/errors.hpp>

#include <charconv>

namespace liepair {

namespace {

using Entries = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>;

LieAlgebra from_brackets(std::vector<std::string> labels, const Entries& brackets) {
  Tensor3 f(labels.size());
  for (const auto& [i, j, k, c] : brackets) {
    f(i, j, k) += c;
    f(j, i, k) -= c;
  }
  return LieAlgebra::from_constants(std::move(labels), f);
}

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Structure constants of the span of the given (linearly independent,
// commutator-closed) square matrices.
LieAlgebra matrix_algebra(std::vector<std::string> labels, const std::vector<Matrix>& mats) {
  const std::size_t n = mats.size();
  auto flat = [](const Matrix& m) {
    Vector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& x : m.row(i)) v.push_back(x);
    return v;
  };
  std::vector<Vector> cols;
  for (const auto& m : mats) cols.push_back(flat(m));
  const Matrix span = Matrix::from_columns(cols, cols.at(0).size());
  Tensor3 f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = solve(span, flat(mats[i] * mats[j] - mats[j] * mats[i]));
      if (!c) throw InternalInconsistency("matrix_algebra: span is not closed");
      for (std::size_t k = 0; k < n; ++k) f(i, j, k) = (*c)[k];
    }
  return LieAlgebra::from_constants(std::move(labels), f);
}

Matrix unit3(std::size_t i, std::size_t j) {
  Matrix m(3, 3);
  m(i, j) = 1;
  return m;
}

}  // namespace

LieAlgebra b3_algebra() {
  const std::vector<std::pair<int, int>> units = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  auto index_of = [&](int r, int c) -> std::size_t {
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == std::pair{r, c}) return i;
    return units.size();
  };
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  Entries br;
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i + 1; j < units.size(); ++j) {
      auto [a, b] = units[i];
      auto [c, d] = units[j];
      if (b == c) br.emplace_back(i, j, index_of(a, d), Scalar(1));
      if (d == a) br.emplace_back(i, j, index_of(c, b), Scalar(-1));
    }
  return from_brackets({"e11", "e12", "e13", "e22", "e23", "e33"}, br);
}

CatalogEntry catalog_entry(std::string_view name) {
  if (name == "b3") {
    return {"b3", LiePair::make(b3_algebra(), 3, "b3"),
            "upper-triangular 3x3 matrices; a = span(e11, e12, e13), complement span(e22, e23, e33)", 3, 2};
  }
  if (name == "b3_twisted") {
    Matrix basis = Matrix::identity(6);
    basis(1, 4) = 1;  // e23 + e12
    auto lie = b3_algebra().change_basis(basis, {"e11", "e12", "e13", "e22", "e23+e12", "e33"});
    return {"b3_twisted", LiePair::make(lie, 3, "b3_twisted"),
            "b3 with the non-closed complement span(e22, e23 + e12, e33)", 3, 2};
  }
  if (name == "sl3_h_e12") {
    auto lie = matrix_algebra({"h1", "h2", "e12", "e13", "e23", "e21", "e31", "e32"},
                              {unit3(0, 0) - unit3(1, 1), unit3(1, 1) - unit3(2, 2), unit3(0, 1), unit3(0, 2),
                               unit3(1, 2), unit3(1, 0), unit3(2, 0), unit3(2, 1)});
    return {"sl3_h_e12", LiePair::make(lie, 3, "sl3_h_e12"),
            "sl3 with a = span(h1, h2, e12), complement the remaining root vectors", 0, 0};
  }
  if (name == "sl2_borel") {
    auto lie = from_brackets({"h", "e", "f"}, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
    return {"sl2_borel", LiePair::make(lie, 2, "sl2_borel"), "sl2 with a = span(h, e), complement span(f)", {}, {}};
  }
  if (name == "aff1") {
    auto lie = from_brackets({"y", "x"}, {{1, 0, 0, 1}});
    return {"aff1", LiePair::make(lie, 1, "aff1"), "[x, y] = y with a = span(y)", 1, {}};
  }
  if (name == "heis3_center") {
    auto lie = from_brackets({"z", "x", "y"}, {{1, 2, 0, 1}});
    return {"heis3_center", LiePair::make(lie, 1, "heis3_center"), "Heisenberg algebra [x, y] = z with a = center",
            {}, {}};
  }
  if (name.starts_with("abelian_")) {
    auto rest = name.substr(8);
    auto us = rest.find('_');
    if (us != std::string_view::npos) {
      auto n = parse_size(rest.substr(0, us));
      auto r = parse_size(rest.substr(us + 1));
      if (n && r && *r > 0 && *r < *n && *n <= 12) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < *n; ++i) labels.push_back("v" + std::to_string(i + 1));
        auto lie = LieAlgebra::from_constants(std::move(labels), Tensor3(*n));
        return {std::string(name), LiePair::make(lie, *r, std::string(name)), "abelian algebra", *r * (*n - *r), {}};
      }
    }
  }
  throw ParseError("unknown catalog pair '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"b3", "b3_twisted", "sl2_borel", "sl3_h_e12", "aff1", "heis3_center", "abelian_4_2"};
}

ArtinAlgebra algebra_by_name(std::string_view name) {
  if (name == "dual") return ArtinAlgebra::dual_numbers();
  if (name.starts_with("t^")) {
    auto k = parse_size(name.substr(2));
    if (k && *k >= 2 && *k <= 32) return ArtinAlgebra::truncated(1, *k);
  }
  if (name.starts_with("m2x")) {
    auto r = parse_size(name.substr(3));
    if (r && *r >= 1 && *r <= 16) return ArtinAlgebra::truncated(*r, 2);
  }
  throw ParseError("unknown algebra '" + std::string(name) + "'");
}

}  // namespace liepair
