#include <liepair/catalog.hpp>
#include <liepair/errors.hpp>
#include <liepair/io.hpp>

#include <fstream>

namespace liepair::io {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

namespace {

Scalar scalar_of(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a rational as a string \"p/q\"");
}

std::size_t index_of(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) throw ParseError(std::string("missing index field '") + key + "'");
  return j.at(key).get<std::size_t>();
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(format_scalar(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_of(j[i][c]);
  }
  return m;
}

bool resolves_to(const ArtinAlgebra& alg) {
  try {
    return !alg.name().empty() && algebra_by_name(alg.name()) == alg;
  } catch (const ParseError&) {
    return false;
  }
}

json algebra_ref(const ArtinAlgebra& alg) { return resolves_to(alg) ? json(alg.name()) : to_json(alg); }

ArtinAlgebra algebra_from(const json& j, const std::optional<ArtinAlgebra>& fallback) {
  if (j.contains("algebra")) {
    const auto& a = j.at("algebra");
    auto alg = a.is_string() ? resolve_algebra(a.get<std::string>()) : artin_from_json(a);
    if (fallback && !(alg == *fallback)) throw AlgebraMismatch("document algebra differs from the requested algebra");
    return alg;
  }
  if (!fallback) throw ParseError("no algebra given");
  return *fallback;
}

}  // namespace

json to_json(const ArtinAlgebra& alg) {
  json table = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      json cell = json::array();
      for (std::size_t l = 0; l < alg.dim(); ++l) cell.push_back(format_scalar(alg.table()(i, k, l)));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  json out = {{"dim", alg.dim()}, {"basis", alg.labels()}, {"table", std::move(table)}};
  if (!alg.name().empty()) out["name"] = alg.name();
  return out;
}

ArtinAlgebra artin_from_json(const json& j) {
  return guarded([&] {
    const auto n = j.at("dim").get<std::size_t>();
    auto labels = j.at("basis").get<std::vector<std::string>>();
    const auto& table = j.at("table");
    if (labels.size() != n || !table.is_array() || table.size() != n)
      throw ParseError("algebra: basis/table sizes do not match dim");
    Tensor3 t(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!table[a].is_array() || table[a].size() != n) throw ParseError("algebra: table row has the wrong length");
      for (std::size_t b = 0; b < n; ++b) {
        if (!table[a][b].is_array() || table[a][b].size() != n) throw ParseError("algebra: product has the wrong length");
        for (std::size_t c = 0; c < n; ++c) t(a, b, c) = scalar_of(table[a][b][c]);
      }
    }
    return ArtinAlgebra::from_table(std::move(labels), t, j.value("name", std::string{}));
  });
}

ArtinAlgebra resolve_algebra(std::string_view ref) {
  try {
    return algebra_by_name(ref);
  } catch (const ParseError&) {
    std::filesystem::path p{std::string(ref)};
    if (!std::filesystem::exists(p)) throw;
    return artin_from_json(read_json_file(p));
  }
}

json to_json(const LieAlgebra& lie) {
  json brackets = json::array();
  const auto& f = lie.constants();
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      for (std::size_t k = 0; k < lie.dim(); ++k)
        if (sgn(f(i, j, k)) != 0) brackets.push_back({{"i", i}, {"j", j}, {"k", k}, {"coeff", format_scalar(f(i, j, k))}});
  return {{"dim", lie.dim()}, {"basis", lie.labels()}, {"brackets", std::move(brackets)}};
}

LieAlgebra lie_from_json(const json& j) {
  return guarded([&] {
    const auto n = j.at("dim").get<std::size_t>();
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != n) throw ParseError("lie: basis size does not match dim");
    Tensor3 f(n);
    for (const auto& b : j.at("brackets")) {
      auto i = index_of(b, "i"), jj = index_of(b, "j"), k = index_of(b, "k");
      if (i >= jj || jj >= n || k >= n) throw ParseError("lie: bracket entries need i < j < dim and k < dim");
      auto c = scalar_of(b.at("coeff"));
      f(i, jj, k) += c;
      f(jj, i, k) -= c;
    }
    return LieAlgebra::from_constants(std::move(labels), f);
  });
}

json to_json(const LiePair& pair) {
  json out = to_json(pair.lie());
  out["subalgebra_rank"] = pair.rank();
  if (!pair.name().empty()) out["name"] = pair.name();
  return out;
}

LiePair pair_from_json(const json& j) {
  return guarded([&] {
    auto lie = lie_from_json(j);
    return LiePair::make(std::move(lie), j.at("subalgebra_rank").get<std::size_t>(), j.value("name", std::string{}));
  });
}

LiePair resolve_pair(std::string_view ref) {
  try {
    return catalog_pair(ref);
  } catch (const ParseError&) {
    std::filesystem::path p{std::string(ref)};
    if (!std::filesystem::exists(p)) throw;
    return pair_from_json(read_json_file(p));
  }
}

json to_json(const OmegaElement& x) {
  const auto& tuples = x.pair().tuples(x.degree());
  json terms = json::array();
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (std::size_t b = 0; b < x.pair().quotient_dim(); ++b)
      if (sgn(x.at(t, b)) != 0)
        terms.push_back({{"indices", tuples[t]}, {"b_index", b}, {"coeff", format_scalar(x.at(t, b))}});
  return {{"degree", x.degree()}, {"terms", std::move(terms)}};
}

OmegaElement omega_from_json(const LiePair& pair, const json& j) {
  return guarded([&] {
    const auto k = j.at("degree").get<std::size_t>();
    OmegaElement x(pair, k);
    for (const auto& t : j.at("terms")) {
      auto idx = t.at("indices").get<std::vector<std::size_t>>();
      auto b = index_of(t, "b_index");
      if (idx.size() != k || b >= pair.quotient_dim()) throw ParseError("omega: term shape does not match degree");
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] >= pair.rank() || (i > 0 && idx[i] <= idx[i - 1]))
          throw ParseError("omega: indices must be strictly increasing a-indices");
      x.at(pair.tuple_index(idx), b) += scalar_of(t.at("coeff"));
    }
    return x;
  });
}

json to_json(const AOmega& xi) {
  json comps = json::array();
  for (std::size_t a = 0; a < xi.algebra().dim(); ++a)
    if (!xi.part(a).is_zero()) comps.push_back({{"m_index", a}, {"omega", to_json(xi.part(a))}});
  return {{"algebra", algebra_ref(xi.algebra())}, {"components", std::move(comps)}};
}

AOmega aomega_from_json(const LiePair& pair, const json& j, const std::optional<ArtinAlgebra>& fallback) {
  return guarded([&] {
    auto alg = algebra_from(j, fallback);
    std::optional<AOmega> out;
    std::size_t degree = 1;
    std::vector<std::pair<std::size_t, OmegaElement>> parts;
    for (const auto& c : j.at("components")) {
      auto a = index_of(c, "m_index");
      if (a >= alg.dim()) throw ParseError("component index out of range");
      parts.emplace_back(a, omega_from_json(pair, c.at("omega")));
      degree = parts.back().second.degree();
    }
    out.emplace(pair, alg, degree);
    for (auto& [a, x] : parts) out->part(a) += x;
    return *out;
  });
}

json to_json(const GaugeParameter& delta) {
  json comps = json::array();
  for (std::size_t a = 0; a < delta.algebra().dim(); ++a)
    if (!delta.part(a).is_zero()) comps.push_back({{"m_index", a}, {"matrix", matrix_to_json(delta.part(a))}});
  return {{"algebra", algebra_ref(delta.algebra())}, {"mode", to_string(delta.mode())}, {"components", std::move(comps)}};
}

GaugeParameter gauge_from_json(const LiePair& pair, const json& j, const std::optional<ArtinAlgebra>& fallback) {
  return guarded([&] {
    auto alg = algebra_from(j, fallback);
    auto mode = parse_gauge_mode(j.value("mode", std::string("weak")));
    const std::size_t n = pair.dim();
    std::vector<Matrix> parts(alg.dim(), Matrix(n, n));
    for (const auto& c : j.at("components")) {
      auto a = index_of(c, "m_index");
      if (a >= alg.dim()) throw ParseError("component index out of range");
      parts[a] += matrix_from_json(c.at("matrix"), n, n);
    }
    return GaugeParameter(pair, alg, std::move(parts), mode);
  });
}

json to_json(const SmallAutomorphism& pi) {
  json comps = json::array();
  const auto& m = pi.map();
  for (std::size_t a = 0; a < m.algebra().dim(); ++a)
    if (!m.block(a).is_zero()) comps.push_back({{"m_index", a}, {"matrix", matrix_to_json(m.block(a))}});
  return {{"algebra", algebra_ref(m.algebra())}, {"components", std::move(comps)}};
}

json to_json(const CohomologyReport& report) {
  json reps = json::array(), image = json::array();
  for (const auto& x : report.representatives) reps.push_back(to_json(x));
  for (const auto& x : report.image_basis) image.push_back(to_json(x));
  return {{"pair", report.pair},
          {"complex", to_string(report.complex)},
          {"degree", report.degree},
          {"dimension", report.dimension},
          {"representatives", std::move(reps)},
          {"image_basis", std::move(image)}};
}

}  // namespace liepair::io
