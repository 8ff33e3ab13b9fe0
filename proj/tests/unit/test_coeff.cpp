#include <liepair/artin.hpp>
#include <liepair/amap.hpp>
#include <liepair/catalog.hpp>
#include <liepair/errors.hpp>
#include <liepair/sampling.hpp>

#include <gtest/gtest.h>

using namespace liepair;

namespace {

Tensor3 truncated_table(std::size_t d) {
  Tensor3 t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i + j < d) t(i, j, i + j) = 1;
  return t;
}

ArtinElement elem(const ArtinAlgebra& a, Vector v) { return ArtinElement(a, std::move(v)); }

}  // namespace

TEST(Artin, TruncatedShapes) {
  auto dual = ArtinAlgebra::truncated(1, 2);
  EXPECT_EQ(dual.dim(), 2u);
  EXPECT_EQ(dual.nilpotency(), 1u);
  auto t1 = ArtinElement::basis(dual, 1);
  EXPECT_TRUE(liepair::is_zero((t1 * t1).coeffs()));

  auto t3 = ArtinAlgebra::truncated(1, 3);
  EXPECT_EQ(t3.dim(), 3u);
  EXPECT_EQ(t3.nilpotency(), 2u);
  EXPECT_EQ(ArtinElement::basis(t3, 1) * ArtinElement::basis(t3, 1), ArtinElement::basis(t3, 2));
  EXPECT_TRUE(liepair::is_zero((ArtinElement::basis(t3, 1) * ArtinElement::basis(t3, 2)).coeffs()));

  auto sq = ArtinAlgebra::truncated(2, 2);
  EXPECT_EQ(sq.dim(), 3u);
  EXPECT_EQ(sq.nilpotency(), 1u);
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j)
      EXPECT_TRUE(liepair::is_zero((ArtinElement::basis(sq, i) * ArtinElement::basis(sq, j)).coeffs()));
}

TEST(Artin, RejectsDegenerateTruncation) {
  EXPECT_THROW(ArtinAlgebra::truncated(0, 2), InvalidStructure);
  EXPECT_THROW(ArtinAlgebra::truncated(1, 1), InvalidStructure);
}

TEST(Artin, ValidateDualPasses) {
  auto rep = validate_artin(truncated_table(2));
  EXPECT_TRUE(rep.ok) << rep.message();
  EXPECT_EQ(rep.nilpotency, 1u);
}

TEST(Artin, CorruptedIdempotentFails) {
  auto table = truncated_table(3);
  table(1, 1, 2) = 0;
  table(1, 1, 1) = 1;
  auto rep = validate_artin(table);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.axiom.empty());
  EXPECT_THROW(ArtinAlgebra::from_table({"1", "t", "t^2"}, table), InvalidStructure);
}

TEST(Artin, ProductOfFieldsFails) {
  // K x K with basis 1 = (1,1), e = (1,0): e*e = e.
  Tensor3 t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 1;
  t(1, 0, 1) = 1;
  t(1, 1, 1) = 1;
  auto rep = validate_artin(t);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "nilpotent");
  // power iteration straight from the table: e^k stays e, so it never reaches 0
  Vector power{0, 1};
  for (int k = 0; k < 5; ++k) {
    Vector next(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) next[l] += power[i] * Scalar(j == 1) * t(i, j, l);
    power = next;
  }
  EXPECT_EQ(power, (Vector{0, 1}));
}

TEST(Artin, NonCommutativeFails) {
  auto table = truncated_table(3);
  table(1, 2, 2) = 1;
  auto rep = validate_artin(table);
  EXPECT_FALSE(rep.ok);
}

TEST(Artin, Evaluation) {
  auto dual = ArtinAlgebra::dual_numbers();
  EXPECT_EQ(ev(elem(dual, {3, 5})), 3);
  EXPECT_EQ(ev(ArtinElement::scalar(dual, 1)), 1);
  EXPECT_EQ(ev(ArtinElement::basis(dual, 1)), 0);
}

TEST(Artin, InvertUnit) {
  auto t3 = ArtinAlgebra::truncated(1, 3);
  auto inv = invert_unit(elem(t3, {1, 1, 0}));
  EXPECT_EQ(inv, elem(t3, {1, -1, 1}));
  EXPECT_EQ(inv * elem(t3, {1, 1, 0}), ArtinElement::scalar(t3, 1));
  EXPECT_EQ(invert_unit(ArtinElement::scalar(t3, 2)), ArtinElement::scalar(t3, Scalar(1, 2)));
  EXPECT_THROW(invert_unit(ArtinElement::basis(t3, 1)), NotAUnit);
}

TEST(Artin, InvertRandomUnits) {
  Sampler s(7);
  for (auto name : {"dual", "t^3", "t^5", "m2x2"}) {
    auto alg = algebra_by_name(name);
    for (int n = 0; n < 200; ++n) {
      auto v = s.vector(alg.dim());
      if (sgn(v[0]) == 0) v[0] = 1;
      ArtinElement a(alg, v);
      EXPECT_EQ(invert_unit(a) * a, ArtinElement::scalar(alg, 1)) << name;
    }
  }
}

TEST(Artin, MultivariateAxioms) {
  auto alg = ArtinAlgebra::truncated(2, 3);
  EXPECT_TRUE(validate_artin(alg.table()).ok);
  EXPECT_EQ(alg.nilpotency(), 2u);
  EXPECT_TRUE(alg.ideal_power(3).empty());
  EXPECT_FALSE(alg.ideal_power(2).empty());
}

TEST(Artin, EvIsMorphism) {
  Sampler s(11);
  auto alg = ArtinAlgebra::truncated(2, 3);
  for (int n = 0; n < 100; ++n) {
    ArtinElement a(alg, s.vector(alg.dim())), b(alg, s.vector(alg.dim()));
    EXPECT_EQ(ev(a * b), ev(a) * ev(b));
    EXPECT_EQ(ev(a + b), ev(a) + ev(b));
  }
}

TEST(Morphism, QuotientKillsTopLayer) {
  auto t3 = ArtinAlgebra::truncated(1, 3);
  auto dual = ArtinAlgebra::dual_numbers();
  auto q = ArtinMorphism::by_labels(t3, dual);
  EXPECT_EQ(morph_apply(q, elem(t3, {1, 1, 1})), elem(dual, {1, 1}));
}

TEST(Morphism, IdentityAndEvaluation) {
  auto t3 = ArtinAlgebra::truncated(1, 3);
  auto a = elem(t3, {2, -1, Scalar(1, 3)});
  EXPECT_EQ(morph_apply(ArtinMorphism::identity(t3), a), a);
  auto e = morph_apply(ArtinMorphism::evaluation(t3), a);
  EXPECT_EQ(e.coeffs().size(), 1u);
  EXPECT_EQ(e[0], 2);
}

TEST(Morphism, RespectsProducts) {
  Sampler s(3);
  auto t4 = ArtinAlgebra::truncated(1, 4);
  auto t2 = ArtinAlgebra::truncated(1, 2);
  auto q = ArtinMorphism::by_labels(t4, t2);
  for (int n = 0; n < 100; ++n) {
    ArtinElement a(t4, s.vector(4)), b(t4, s.vector(4));
    EXPECT_EQ(morph_apply(q, a * b), morph_apply(q, a) * morph_apply(q, b));
  }
}

TEST(Morphism, RejectsNonMultiplicative) {
  auto t3 = ArtinAlgebra::truncated(1, 3);
  Matrix m = Matrix::identity(3);
  m(2, 2) = 2;  // t -> t but t^2 -> 2 t^2
  EXPECT_THROW(ArtinMorphism(t3, t3, m), InvalidStructure);
}

TEST(AMap, InvertCenterIdentity) {
  Sampler s(5);
  auto alg = ArtinAlgebra::truncated(1, 4);
  for (int n = 0; n < 50; ++n) {
    AMatrix m = AMatrix::identity(alg, 3);
    for (std::size_t a = 1; a < alg.dim(); ++a)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.block(a)(i, j) = s.scalar(true);
    EXPECT_EQ(invert(m) * m, AMatrix::identity(alg, 3));
    EXPECT_EQ(m * invert(m), AMatrix::identity(alg, 3));
  }
}

TEST(AMap, SingularCenterRejected) {
  auto alg = ArtinAlgebra::dual_numbers();
  AMatrix m(alg, 2, 2);
  m.block(1) = Matrix::identity(2);
  EXPECT_THROW(invert(m), NotAUnit);
}

TEST(Matrix, RankAndNullspace) {
  auto m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(liepair::is_zero(m.apply(ns[0])));
  Vector b{1, 2, 0};
  auto x = solve(m, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), b);
  EXPECT_FALSE(solve(m, Vector{1, 0, 0}).has_value());
}

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(parse_scalar("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(format_scalar(Scalar(-3, 2)), "-3/2");
  EXPECT_EQ(format_scalar(Scalar(4)), "4");
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("0.5"), ParseError);
}
