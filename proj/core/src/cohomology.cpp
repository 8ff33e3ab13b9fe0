#include <liepair/cohomology.hpp>
#include <liepair/errors.hpp>

namespace liepair {

std::string to_string(Complex c) {
  switch (c) {
    case Complex::ce: return "CE";
    case Complex::h_ext: return "H_ext";
    case Complex::h0_ext: return "H0_ext";
  }
  return "CE";
}

Matrix d_ce_matrix(const LiePair& pair, std::size_t k) {
  const std::size_t src = pair.omega_dim(k), dst = pair.omega_dim(k + 1);
  Matrix m(dst, src);
  for (std::size_t j = 0; j < src; ++j) {
    Vector e(src);
    e[j] = 1;
    auto col = d_ce(OmegaElement(pair, k, std::move(e))).coeffs();
    for (std::size_t i = 0; i < dst; ++i) m(i, j) = col[i];
  }
  return m;
}

namespace {

std::vector<Vector> kernel(const Matrix& m) {
  if (m.rows() == 0) {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vector e(m.cols());
      e[j] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  if (m.cols() == 0) return {};
  return nullspace(m);
}

CohomologyReport build(const LiePair& pair, Complex c, std::size_t k, const std::vector<Vector>& cocycles,
                       const std::vector<Vector>& image) {
  const std::size_t dim = pair.omega_dim(k);
  CohomologyReport rep;
  rep.pair = pair.name();
  rep.complex = c;
  rep.degree = k;
  rep.kernel_dimension = cocycles.size();
  std::vector<Vector> span = image.empty() ? std::vector<Vector>{} : row_space(image, dim);
  for (const auto& v : span) rep.image_basis.emplace_back(pair, k, v);
  for (const auto& z : cocycles) {
    if (in_span(span, z)) continue;
    span.push_back(z);
    span = row_space(span, dim);
    rep.representatives.emplace_back(pair, k, z);
  }
  rep.dimension = rep.representatives.size();
  if (rep.dimension + rep.image_basis.size() != rep.kernel_dimension)
    throw InternalInconsistency("cohomology: image is not contained in the cocycles");
  return rep;
}

CohomologyReport h1_with(const LiePair& pair, Complex c, const std::vector<Matrix>& derivations) {
  auto cocycles = kernel(d_ce_matrix(pair, 1));
  std::vector<Vector> image;
  const auto d0 = d_ce_matrix(pair, 0);
  for (std::size_t j = 0; j < d0.cols(); ++j) image.push_back(d0.column(j));
  for (const auto& d : derivations) image.push_back(ext_b1(pair, d).coeffs());
  return build(pair, c, 1, cocycles, image);
}

}  // namespace

CohomologyReport h_ce(const LiePair& pair, std::size_t k) {
  if (k > pair.rank()) throw DegreeMismatch("h_ce: degree exceeds subalgebra rank");
  auto cocycles = kernel(d_ce_matrix(pair, k));
  std::vector<Vector> image;
  if (k > 0) {
    const auto prev = d_ce_matrix(pair, k - 1);
    for (std::size_t j = 0; j < prev.cols(); ++j) image.push_back(prev.column(j));
  }
  return build(pair, Complex::ce, k, cocycles, image);
}

CohomologyReport h1_ext(const LiePair& pair) {
  std::vector<Matrix> ders;
  for (const auto& d : pair.derivations()) ders.push_back(d.matrix());
  return h1_with(pair, Complex::h_ext, ders);
}

CohomologyReport h1_ext0(const LiePair& pair) { return h1_with(pair, Complex::h0_ext, pair.inner_derivations()); }

bool same_class(const CohomologyReport& report, const OmegaElement& x, const OmegaElement& y) {
  if (x.degree() != report.degree || y.degree() != report.degree) throw DegreeMismatch("same_class: degree mismatch");
  std::vector<Vector> span;
  for (const auto& v : report.image_basis) span.push_back(v.coeffs());
  return in_span(span, (x - y).coeffs());
}

}  // namespace liepair
