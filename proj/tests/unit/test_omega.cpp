#include "oracles.hpp"

#include <liepair/errors.hpp>

#include <gtest/gtest.h>

using namespace liepair;

namespace {

/// Value of a degree-2 element on every basis pair (i < j), flattened.
Vector values2(const OmegaElement& x) {
  Vector out;
  for (const auto& t : x.pair().tuples(2)) {
    auto v = x.eval(t);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

template <class F>
Vector formula2(const LiePair& pair, F f) {
  Vector out;
  const std::size_t r = pair.rank();
  for (const auto& t : pair.tuples(2)) {
    auto v = f(oracle::basis_vector(r, t[0]), oracle::basis_vector(r, t[1]));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Vector scaled(Vector v, const Scalar& s) {
  for (auto& c : v) c *= s;
  return v;
}

std::vector<LiePair> pairs_with_rank_at_least(std::size_t r) {
  std::vector<LiePair> out;
  for (const auto& n : catalog_names()) {
    auto p = catalog_pair(n);
    if (p.rank() >= r) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Omega, EvalAntisymmetry) {
  auto pair = catalog_pair("b3");
  Sampler s(1);
  auto x = s.omega(pair, 2);
  std::vector<std::size_t> ab{0, 2}, ba{2, 0}, aa{1, 1};
  EXPECT_EQ(x.eval(ab), scaled(x.eval(ba), -1));
  EXPECT_TRUE(liepair::is_zero(x.eval(aa)));
}

TEST(Omega, MatrixRoundTrip) {
  auto pair = catalog_pair("sl3_h_e12");
  Sampler s(2);
  auto x = s.omega(pair, 1);
  EXPECT_EQ(OmegaElement::from_matrix(pair, x.to_matrix()), x);
  EXPECT_THROW(OmegaElement(pair, 1, Vector(3)), DegreeMismatch);
}

TEST(DCE, AbelianVanishes) {
  auto pair = catalog_pair("abelian_4_2");
  Sampler s(3);
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_TRUE(d_ce(s.omega(pair, k)).is_zero());
}

TEST(DCE, B3ClassOfE22IsClosed) {
  auto pair = catalog_pair("b3");
  OmegaElement b(pair, 0);
  b.at(0, 0) = 1;
  EXPECT_TRUE(d_ce(b).is_zero());
  // oracle: [e1j, e22] lands in a for every j
  auto m = oracle::b3_matrices();
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = oracle::commutator(m[i], m[3]);
    EXPECT_TRUE(sgn(c(1, 1)) == 0 && sgn(c(1, 2)) == 0 && sgn(c(2, 2)) == 0);
  }
}

TEST(DCE, Aff1DegreeZeroIsZeroMap) {
  auto pair = catalog_pair("aff1");
  OmegaElement b(pair, 0);
  b.at(0, 0) = 1;
  EXPECT_TRUE(d_ce(b).is_zero());
}

TEST(DCE, DegreeOneMatchesExplicitFormula) {
  Sampler s(4);
  for (const auto& pair : pairs_with_rank_at_least(2))
    for (int n = 0; n < 20; ++n) {
      auto xi = s.omega(pair, 1);
      auto m = xi.to_matrix();
      EXPECT_EQ(values2(d_ce(xi)), formula2(pair, [&](const Vector& a1, const Vector& a2) {
                  return oracle::paper_d1(pair, m, a1, a2);
                })) << pair.name();
    }
}

TEST(DCE, SquaresToZero) {
  Sampler s(5);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    for (std::size_t k = 0; k + 2 <= pair.rank(); ++k)
      for (int i = 0; i < 5; ++i) EXPECT_TRUE(d_ce(d_ce(s.omega(pair, k))).is_zero()) << n << " k=" << k;
  }
}

TEST(DCE, TopDegreeMapsToZeroSpace) {
  auto pair = catalog_pair("aff1");
  Sampler s(6);
  auto top = d_ce(s.omega(pair, 1));
  EXPECT_EQ(top.degree(), 2u);
  EXPECT_TRUE(top.coeffs().empty());
}

TEST(B2, DiagonalMatchesFormula) {
  Sampler s(7);
  for (const auto& pair : pairs_with_rank_at_least(2))
    for (int n = 0; n < 20; ++n) {
      auto xi = s.omega(pair, 1);
      auto m = xi.to_matrix();
      auto expect = formula2(pair, [&](const Vector& a1, const Vector& a2) {
        return scaled(oracle::paper_half_b2(pair, m, a1, a2), 2);
      });
      EXPECT_EQ(values2(b2_deg1(xi, xi)), expect) << pair.name();
    }
}

TEST(B2, PolarizationAndSymmetry) {
  Sampler s(8);
  for (const auto& pair : pairs_with_rank_at_least(2))
    for (int n = 0; n < 10; ++n) {
      auto xi = s.omega(pair, 1), eta = s.omega(pair, 1);
      auto lhs = b2_deg1(xi, eta);
      EXPECT_EQ(lhs, b2_deg1(eta, xi));
      auto pol = Scalar(1, 2) * (b2_deg1(xi + eta, xi + eta) - b2_deg1(xi, xi) - b2_deg1(eta, eta));
      EXPECT_EQ(lhs, pol) << pair.name();
    }
}

TEST(B2, ZeroAndAbelian) {
  Sampler s(9);
  auto b3 = catalog_pair("b3");
  EXPECT_TRUE(b2_deg1(OmegaElement(b3, 1), s.omega(b3, 1)).is_zero());
  auto ab = catalog_pair("abelian_4_2");
  EXPECT_TRUE(b2_deg1(s.omega(ab, 1), s.omega(ab, 1)).is_zero());
}

TEST(B2, B3ElementaryTwoWays) {
  auto pair = catalog_pair("b3");
  auto xi = oracle::elementary(pair, 1, 1);  // e12* (x) class(e23)
  auto m = xi.to_matrix();
  EXPECT_EQ(values2(b2_deg1(xi, xi)), formula2(pair, [&](const Vector& a1, const Vector& a2) {
              return scaled(oracle::paper_half_b2(pair, m, a1, a2), 2);
            }));
  auto eta = oracle::elementary(pair, 2, 0);
  auto pol = Scalar(1, 2) * (b2_deg1(xi + eta, xi + eta) - b2_deg1(xi, xi) - b2_deg1(eta, eta));
  EXPECT_EQ(b2_deg1(xi, eta), pol);
}

TEST(B3, DiagonalMatchesFormula) {
  Sampler s(10);
  for (const auto& pair : pairs_with_rank_at_least(2))
    for (int n = 0; n < 20; ++n) {
      auto xi = s.omega(pair, 1);
      auto m = xi.to_matrix();
      auto expect = formula2(pair, [&](const Vector& a1, const Vector& a2) {
        return scaled(oracle::paper_sixth_b3(pair, m, a1, a2), 6);
      });
      EXPECT_EQ(values2(b3_deg1(xi, xi, xi)), expect) << pair.name();
    }
}

TEST(B3, SymmetricTrilinearPolarization) {
  Sampler s(11);
  for (const auto& pair : pairs_with_rank_at_least(2))
    for (int n = 0; n < 5; ++n) {
      auto x = s.omega(pair, 1), y = s.omega(pair, 1), z = s.omega(pair, 1);
      auto Q = [](const OmegaElement& u) { return b3_deg1(u, u, u); };
      auto lhs = b3_deg1(x, y, z);
      EXPECT_EQ(lhs, b3_deg1(y, x, z));
      EXPECT_EQ(lhs, b3_deg1(z, y, x));
      EXPECT_EQ(lhs, b3_deg1(x, z, y));
      auto pol = Q(x + y + z) - Q(x + y) - Q(x + z) - Q(y + z) + Q(x) + Q(y) + Q(z);
      EXPECT_EQ(lhs, Scalar(1, 6) * pol) << pair.name();
      EXPECT_TRUE(b3_deg1(x, OmegaElement(pair, 1), z).is_zero());
    }
}

TEST(B3, MatchedPairsVanish) {
  Sampler s(12);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    if (!is_matched(pair)) continue;
    for (int i = 0; i < 20; ++i) {
      auto xi = s.omega(pair, 1);
      EXPECT_TRUE(b3_deg1(xi, xi, xi).is_zero()) << n;
    }
  }
}

TEST(B3, NonzeroWitnessIffComplementBracketLeaks) {
  for (const auto& pair : pairs_with_rank_at_least(2)) {
    const std::size_t r = pair.rank(), q = pair.quotient_dim(), n = pair.dim();
    bool leaks = false;
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        leaks = leaks || !liepair::is_zero(
                             pair.project_a(pair.lie().bracket(oracle::basis_vector(n, r + b), oracle::basis_vector(n, r + c))));
    bool witness = false;
    std::vector<OmegaElement> elems;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t b = 0; b < q; ++b) elems.push_back(oracle::elementary(pair, i, b));
    for (std::size_t a = 0; a < elems.size() && !witness; ++a)
      for (std::size_t b = a; b < elems.size() && !witness; ++b)
        for (std::size_t c = 0; c < elems.size() && !witness; ++c)
          witness = !b3_deg1(elems[a], elems[b], elems[c]).is_zero();
    EXPECT_EQ(witness, leaks) << pair.name();
  }
}

TEST(Ext1, InnerE11OnB3Vanishes) {
  auto pair = catalog_pair("b3");
  EXPECT_TRUE(ext_b1(pair, inner_derivation(pair.lie(), oracle::basis_vector(6, 0)).matrix()).is_zero());
}

TEST(Ext1, AdFOnBorel) {
  auto pair = catalog_pair("sl2_borel");
  auto x = ext_b1(pair, inner_derivation(pair.lie(), oracle::basis_vector(3, 2)).matrix());
  // [f, h] = 2f, [f, e] = -h
  Matrix expect(1, 2);
  expect(0, 0) = -2;
  EXPECT_EQ(x.to_matrix(), expect);
}

TEST(Ext1, ZeroIffPreservesSubalgebra) {
  Sampler s(13);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    for (int i = 0; i < 10; ++i) {
      auto d = s.derivation(pair);
      bool preserves = true;
      for (std::size_t c = 0; c < pair.rank(); ++c)
        for (std::size_t row = pair.rank(); row < pair.dim(); ++row) preserves = preserves && sgn(d(row, c)) == 0;
      EXPECT_EQ(ext_b1(pair, d).is_zero(), preserves) << n;
      EXPECT_TRUE(d_ce(ext_b1(pair, d)).is_zero()) << n;
    }
  }
}

TEST(Ext2, MatchesActionFormula) {
  Sampler s(14);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    for (std::size_t k = 0; k <= pair.rank(); ++k)
      for (int i = 0; i < 5; ++i) {
        auto d = s.derivation(pair);
        auto x = s.omega(pair, k);
        auto y = ext_b2(d, x);
        for (const auto& t : pair.tuples(k)) EXPECT_EQ(y.eval(t), oracle::ext_b2_direct(d, x, t)) << n << " k=" << k;
      }
  }
}

TEST(Ext2, AbelianScaling) {
  auto pair = catalog_pair("abelian_4_2");
  Sampler s(15);
  for (std::size_t k = 0; k <= 2; ++k) {
    auto x = s.omega(pair, k);
    EXPECT_EQ(ext_b2(Matrix::identity(4), x), x - Scalar(static_cast<long>(k)) * x);
    EXPECT_TRUE(ext_b2(Matrix(4, 4), x).is_zero());
  }
}

TEST(Ext2, DerivationCommutatorIsAdjoint) {
  auto lie = catalog_pair("sl2_borel").lie();
  Sampler s(16);
  for (int i = 0; i < 20; ++i) {
    auto u = s.vector(3), v = s.vector(3);
    EXPECT_EQ(ext_b2_der(lie.ad(u), lie.ad(v)), lie.ad(lie.bracket(u, v)));
  }
  auto h = lie.ad(oracle::basis_vector(3, 0)), e = lie.ad(oracle::basis_vector(3, 1));
  EXPECT_EQ(ext_b2_der(h, e), oracle::commutator(h, e));
}

TEST(Ext3, MatchesPermutationOracle) {
  Sampler s(17);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    const std::size_t r = pair.rank();
    for (std::size_t p = 1; p <= r; ++p)
      for (std::size_t q = 1; p + q - 1 <= r; ++q)
        for (int i = 0; i < 3; ++i) {
          auto d = s.derivation(pair);
          auto x = s.omega(pair, p), y = s.omega(pair, q);
          auto z = ext_b3(d, x, y);
          ASSERT_EQ(z.degree(), p + q - 1);
          for (const auto& t : pair.tuples(p + q - 1))
            EXPECT_EQ(z.eval(t), oracle::ext_b3_by_permutations(d, x, y, t)) << n << " p=" << p << " q=" << q;
        }
  }
}

TEST(Ext3, DegreeOneSymmetricFormula) {
  auto pair = catalog_pair("b3");
  auto d = inner_derivation(pair.lie(), oracle::basis_vector(6, 4)).matrix();  // ad_e23
  auto xi = oracle::elementary(pair, 1, 0), eta = oracle::elementary(pair, 0, 2);
  auto z = ext_b3(d, xi, eta);
  EXPECT_EQ(z, ext_b3(d, eta, xi));
  const std::size_t r = 3;
  auto phi = [&](const Vector& b) {
    Vector a(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < 3; ++c) a[i] += d(i, r + c) * b[c];
    return a;
  };
  for (std::size_t a = 0; a < r; ++a) {
    std::vector<std::size_t> none;
    std::vector<std::size_t> ai{a};
    auto expect = oracle::add(eta.eval_first(phi(xi.eval(ai)), none), xi.eval_first(phi(eta.eval(ai)), none));
    EXPECT_EQ(z.eval(ai), expect);
  }
}

TEST(Ext3, VanishesWhenComplementPreserved) {
  Sampler s(18);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    if (!is_matched(pair)) continue;
    for (const auto& ad : pair.complement_derivations())
      for (int i = 0; i < 5; ++i) {
        auto x = s.omega(pair, 1), y = s.omega(pair, 1);
        EXPECT_TRUE(ext_b3(ad, x, y).is_zero()) << n;
      }
  }
}

TEST(Ext3, OverflowIsZero) {
  auto pair = catalog_pair("sl2_borel");
  Sampler s(19);
  auto z = ext_b3(s.derivation(pair), s.omega(pair, 2), s.omega(pair, 2));
  EXPECT_EQ(z.degree(), 3u);
  EXPECT_TRUE(z.is_zero());
}

TEST(HZero, DifferentialIsSum) {
  auto pair = catalog_pair("b3");
  Sampler s(20);
  HZero h{s.derivation(pair), s.omega(pair, 0)};
  EXPECT_EQ(h_zero_differential(pair, h), ext_b1(pair, h.derivation) + d_ce(h.section));
}

TEST(Ext2, ActionLawOnStabilizer) {
  Sampler s(21);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    for (std::size_t k = 0; k <= pair.rank(); ++k) {
      auto d1 = s.stabilizer_derivation(pair), d2 = s.stabilizer_derivation(pair);
      ASSERT_TRUE(ext_b1(pair, d1).is_zero());
      auto x = s.omega(pair, k);
      EXPECT_EQ(ext_b2(ext_b2_der(d1, d2), x), ext_b2(d1, ext_b2(d2, x)) - ext_b2(d2, ext_b2(d1, x))) << n;
    }
  }
}

TEST(Ext2, ActionLawUpToThreeBracket) {
  Sampler s(22);
  std::size_t literal_failures = 0;
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    const std::size_t r = pair.rank();
    for (std::size_t k = 0; k <= r; ++k)
      for (int i = 0; i < 3; ++i) {
        auto d1 = s.derivation(pair), d2 = s.derivation(pair);
        auto x = s.omega(pair, k);
        auto lhs = ext_b2(ext_b2_der(d1, d2), x);
        auto rhs = ext_b2(d1, ext_b2(d2, x)) - ext_b2(d2, ext_b2(d1, x));
        literal_failures += !(lhs == rhs);
        if (k >= 1) {
          rhs += ext_b3(d1, ext_b1(pair, d2), x) - ext_b3(d2, ext_b1(pair, d1), x);
        } else {
          // the same correction with a degree-0 argument: only X(phi(b)) survives
          auto phi = [&](const Matrix& d) {
            Vector a(r);
            for (std::size_t c = 0; c < r; ++c)
              for (std::size_t b = 0; b < pair.quotient_dim(); ++b) a[c] += d(c, r + b) * x.coeffs()[b];
            return a;
          };
          std::vector<std::size_t> none;
          auto v = oracle::add(ext_b1(pair, d2).eval_first(phi(d1), none), ext_b1(pair, d1).eval_first(phi(d2), none), -1);
          rhs += OmegaElement(pair, 0, v);
        }
        EXPECT_EQ(lhs, rhs) << n << " k=" << k;
      }
  }
  // the uncorrected law is genuinely false on derivations moving a
  EXPECT_GT(literal_failures, 0u);
}

TEST(Ext2, TwoJacobiWithDifferential) {
  Sampler s(23);
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    if (pair.rank() < 2) continue;
    for (int i = 0; i < 5; ++i) {
      auto d = s.derivation(pair);
      auto x = s.omega(pair, 1);
      EXPECT_EQ(d_ce(ext_b2(d, x)) - ext_b2(d, d_ce(x)), b2_deg1(ext_b1(pair, d), x)) << n;
    }
  }
}
