#include <liepair/catalog.hpp>
#include <liepair/cohomology.hpp>
#include <liepair/errors.hpp>
#include <liepair/sampling.hpp>
#include <liepair/suites.hpp>

#include <functional>

namespace liepair {

bool SuiteReport::ok() const {
  for (const auto& p : properties)
    if (!p.passed) return false;
  return true;
}

std::vector<std::string> suite_names() { return {"axioms", "brackets", "gauge-bridge", "appendix", "cohomology", "all"}; }

namespace {

class Campaign {
 public:
  Campaign(SuiteReport& rep, std::string module, std::string property) : rep_(rep) {
    rep_.properties.push_back({std::move(module), std::move(property), 0, true, {}, 0});
  }

  // Runs one instance; `check` returns an empty string on success.
  void run(const std::string& label, const std::function<std::string()>& check) {
    auto& p = rep_.properties.back();
    ++p.instances;
    if (!p.passed) return;
    std::string why;
    try {
      why = check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      p.passed = false;
      p.witness = label + ": " + why;
    }
  }

  PropertyResult& result() { return rep_.properties.back(); }

 private:
  SuiteReport& rep_;
};

std::string fail_if(bool bad, const char* what) { return bad ? what : ""; }

std::vector<ArtinAlgebra> small_algebras() {
  return {algebra_by_name("dual"), algebra_by_name("t^3"), algebra_by_name("t^4"), algebra_by_name("m2x2")};
}

std::vector<LiePair> pairs() {
  std::vector<LiePair> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_pair(n));
  return out;
}

ArtinElement random_element(Sampler& s, const ArtinAlgebra& alg) { return {alg, s.vector(alg.dim())}; }

void axioms(SuiteReport& rep, Sampler& s, std::size_t scale) {
  {
    Campaign c(rep, "coeff", "algebra axioms and nilpotency order");
    for (const auto& alg : small_algebras())
      c.run(alg.name(), [&] {
        auto r = validate_artin(alg.table());
        if (!r.ok) return r.message();
        auto top = alg.ideal_power(alg.nilpotency());
        auto next = alg.ideal_power(alg.nilpotency() + 1);
        return fail_if(top.empty() || !next.empty(), "nilpotency order mismatch");
      });
  }
  {
    Campaign c(rep, "coeff", "ev is an algebra morphism");
    for (const auto& alg : small_algebras())
      for (std::size_t i = 0; i < 50 * scale; ++i)
        c.run(alg.name(), [&] {
          auto a = random_element(s, alg), b = random_element(s, alg);
          return fail_if(ev(a * b) != ev(a) * ev(b) || ev(a + b) != ev(a) + ev(b), "ev not multiplicative");
        });
  }
  {
    Campaign c(rep, "coeff", "invert_unit(a) * a = 1");
    for (const auto& alg : small_algebras())
      for (std::size_t i = 0; i < 200 * scale; ++i)
        c.run(alg.name(), [&] {
          auto a = random_element(s, alg);
          if (sgn(ev(a)) == 0) a = a + ArtinElement::scalar(alg, 1);
          return fail_if(!(invert_unit(a) * a == ArtinElement::scalar(alg, 1)), "inverse mismatch");
        });
  }
  {
    Campaign c(rep, "coeff", "morphisms respect products");
    const auto src = algebra_by_name("t^4");
    for (const auto& tgt : {algebra_by_name("t^3"), algebra_by_name("dual")}) {
      ArtinMorphism theta = ArtinMorphism::by_labels(src, tgt);
      for (std::size_t i = 0; i < 50 * scale; ++i)
        c.run(tgt.name(), [&] {
          auto a = random_element(s, src), b = random_element(s, src);
          return fail_if(!(morph_apply(theta, a * b) == morph_apply(theta, a) * morph_apply(theta, b)),
                         "theta(ab) != theta(a) theta(b)");
        });
    }
  }
  {
    Campaign c(rep, "liealg", "derivations satisfy Leibniz and contain IDer");
    for (const auto& pair : pairs())
      c.run(pair.name(), [&] {
        std::vector<Vector> der;
        for (const auto& d : pair.derivations()) {
          if (!Derivation::satisfies_leibniz(pair.lie(), d.matrix())) return std::string("Leibniz fails");
          Vector v;
          for (std::size_t i = 0; i < pair.dim(); ++i)
            for (const auto& x : d.matrix().row(i)) v.push_back(x);
          der.push_back(std::move(v));
        }
        for (const auto& ad : pair.inner_derivations()) {
          Vector v;
          for (std::size_t i = 0; i < pair.dim(); ++i)
            for (const auto& x : ad.row(i)) v.push_back(x);
          if (!in_span(der, v)) return std::string("inner derivation outside Der");
        }
        return std::string();
      });
  }
  {
    Campaign c(rep, "liealg", "Bott connection is flat");
    for (const auto& pair : pairs())
      c.run(pair.name(), [&] {
        const auto& f = pair.lie().constants();
        for (std::size_t i = 0; i < pair.rank(); ++i)
          for (std::size_t j = i + 1; j < pair.rank(); ++j) {
            Matrix lhs(pair.quotient_dim(), pair.quotient_dim());
            for (std::size_t k = 0; k < pair.rank(); ++k)
              if (sgn(f(i, j, k)) != 0) lhs += f(i, j, k) * pair.bott(k);
            if (!(lhs == ext_b2_der(pair.bott(i), pair.bott(j)))) return std::string("flatness fails");
          }
        return std::string();
      });
  }
}

void brackets(SuiteReport& rep, Sampler& s, std::size_t scale) {
  const auto all = pairs();
  {
    Campaign c(rep, "omega", "d_ce o d_ce = 0");
    for (const auto& pair : all)
      for (std::size_t k = 0; k + 2 <= pair.rank() + 1; ++k)
        for (std::size_t i = 0; i < 10 * scale; ++i)
          c.run(pair.name(), [&] { return fail_if(!d_ce(d_ce(s.omega(pair, k))).is_zero(), "d^2 != 0"); });
  }
  {
    Campaign c(rep, "omega", "ext_b1 lands in cocycles");
    for (const auto& pair : all)
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] { return fail_if(!d_ce(ext_b1(pair, s.derivation(pair))).is_zero(), "d [delta]_1 != 0"); });
  }
  {
    Campaign c(rep, "omega", "Der-action law for ext_b2 on a-preserving derivations");
    for (const auto& pair : all)
      for (std::size_t k = 1; k <= std::min<std::size_t>(2, pair.rank()); ++k)
        for (std::size_t i = 0; i < 10 * scale; ++i)
          c.run(pair.name(), [&] {
            auto d1 = s.stabilizer_derivation(pair), d2 = s.stabilizer_derivation(pair);
            auto x = s.omega(pair, k);
            auto lhs = ext_b2(ext_b2_der(d1, d2), x);
            auto rhs = ext_b2(d1, ext_b2(d2, x)) - ext_b2(d2, ext_b2(d1, x));
            return fail_if(!(lhs == rhs), "action law fails");
          });
  }
  {
    Campaign c(rep, "omega", "Der-action law up to the 3-bracket homotopy");
    for (const auto& pair : all)
      for (std::size_t k = 1; k <= std::min<std::size_t>(2, pair.rank()); ++k)
        for (std::size_t i = 0; i < 10 * scale; ++i)
          c.run(pair.name(), [&] {
            auto d1 = s.derivation(pair), d2 = s.derivation(pair);
            auto x = s.omega(pair, k);
            auto lhs = ext_b2(ext_b2_der(d1, d2), x);
            auto rhs = ext_b2(d1, ext_b2(d2, x)) - ext_b2(d2, ext_b2(d1, x)) +
                       ext_b3(d1, ext_b1(pair, d2), x) - ext_b3(d2, ext_b1(pair, d1), x);
            return fail_if(!(lhs == rhs), "homotopy action law fails");
          });
  }
  {
    Campaign c(rep, "omega", "2-Jacobi instance for (Der, Omega^1)");
    for (const auto& pair : all)
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] {
          auto d = s.derivation(pair);
          auto x = s.omega(pair, 1);
          auto lhs = d_ce(ext_b2(d, x)) - ext_b2(d, d_ce(x));
          return fail_if(!(lhs == b2_deg1(ext_b1(pair, d), x)), "2-Jacobi fails");
        });
  }
  {
    Campaign c(rep, "omega", "polarization matches the diagonal formulas");
    for (const auto& pair : all)
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] {
          auto x = s.omega(pair, 1), y = s.omega(pair, 1);
          auto pol = Scalar(1, 2) * (b2_deg1(x + y, x + y) - b2_deg1(x, x) - b2_deg1(y, y));
          if (!(pol == b2_deg1(x, y))) return std::string("2-bracket polarization");
          auto z = s.omega(pair, 1);
          if (!(b3_deg1(x, y, z) == b3_deg1(z, x, y) && b3_deg1(x, y, z) == b3_deg1(y, x, z)))
            return std::string("3-bracket symmetry");
          return std::string();
        });
  }
  {
    Campaign c(rep, "omega", "matched pairs have vanishing 3-brackets");
    for (const auto& pair : all) {
      if (!is_matched(pair)) continue;
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] {
          auto x = s.omega(pair, 1);
          if (!b3_deg1(x, x, x).is_zero()) return std::string("diagonal 3-bracket nonzero");
          auto d = s.derivation(pair, GaugeMode::matched);
          return fail_if(!ext_b3(d, x, s.omega(pair, 1)).is_zero(), "ext_b3(ad_jb) nonzero");
        });
    }
  }
  {
    Campaign c(rep, "deform", "std_check agrees with is_mc");
    const auto alg = algebra_by_name("t^3");
    for (const auto& pair : all)
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] {
          auto xi = i % 2 ? s.mc(pair, alg).value() : s.omega_m(pair, alg);
          return fail_if(std_check(xi) != is_mc(xi), "std_check and is_mc disagree");
        });
  }
  {
    Campaign c(rep, "deform", "standard-deformation defect equals the MC residual");
    for (const auto& alg : small_algebras())
      for (const auto& pair : all)
        for (std::size_t i = 0; i < 3 * scale; ++i)
          c.run(pair.name() + "/" + alg.name(), [&] {
            auto xi = s.omega_m(pair, alg);
            return fail_if(!(std_defect(xi) == mc_residual(xi)), "defect and residual differ");
          });
  }
  {
    Campaign c(rep, "deform", "non-MC elements can break Jacobi (r >= 3)");
    const auto alg = algebra_by_name("t^3");
    for (const auto& pair : all) {
      if (pair.rank() < 3) continue;
      c.run(pair.name(), [&] {
        for (int tries = 0; tries < 200; ++tries) {
          auto xi = s.omega_m(pair, alg);
          if (std_check(xi)) continue;
          if (InducedBracket::raw(xi).jacobi_violation()) return std::string();
        }
        return std::string("no violation found in 200 non-MC samples");
      });
    }
  }
  {
    Campaign c(rep, "deform", "induced bracket satisfies Jacobi for MC elements");
    const auto alg = algebra_by_name("t^3");
    for (const auto& pair : all)
      for (std::size_t i = 0; i < 5 * scale; ++i)
        c.run(pair.name(), [&] {
          auto br = induced_bracket(s.mc(pair, alg).value());
          return fail_if(!br.antisymmetric() || br.jacobi_violation().has_value(), "Jacobi over A fails");
        });
  }
}

void gauge_bridge(SuiteReport& rep, Sampler& s, std::size_t scale) {
  const auto all = pairs();
  const auto algs = small_algebras();
  Campaign c(rep, "mc", "gauge_act = act_on_sd o exp");
  for (std::size_t i = 0; i < 10 * scale; ++i)
    for (const auto& pair : all) {
      const auto& alg = algs[i % algs.size()];
      c.run(pair.name() + "/" + alg.name(), [&] {
        auto xi = s.mc(pair, alg);
        auto delta = s.gauge(pair, alg);
        return fail_if(!(gauge_act(delta, xi).value() == act_on_sd(exp_derivation(delta), xi.value())),
                       "bridge identity fails");
      });
    }
  Campaign e(rep, "deform", "log o exp = id and exp o log = id");
  for (std::size_t i = 0; i < 10 * scale; ++i)
    for (const auto& pair : all) {
      const auto& alg = algs[i % algs.size()];
      e.run(pair.name() + "/" + alg.name(), [&] {
        auto delta = s.gauge(pair, alg);
        auto pi = exp_derivation(delta);
        auto back = log_automorphism(pi);
        return fail_if(!(back == delta) || !(exp_derivation(back) == pi), "exp/log round trip fails");
      });
    }
  Campaign k(rep, "deform", "action composition law");
  for (std::size_t i = 0; i < 5 * scale; ++i)
    for (const auto& pair : all) {
      const auto& alg = algs[i % algs.size()];
      k.run(pair.name() + "/" + alg.name(), [&] {
        auto xi = s.mc(pair, alg).value();
        auto p1 = s.automorphism(pair, alg), p2 = s.automorphism(pair, alg);
        return fail_if(!(act_on_sd(p1 * p2, xi) == act_on_sd(p1, act_on_sd(p2, xi))), "composition law fails");
      });
    }
}

void appendix(SuiteReport& rep, Sampler& s, std::size_t scale) {
  Campaign c(rep, "deform", "appendix identity for x^k, y^k");
  const auto alg = algebra_by_name("t^5");
  for (const auto& name : {"b3", "sl2_borel", "aff1", "sl3_h_e12"}) {
    const auto pair = catalog_pair(name);
    for (std::size_t i = 0; i < 4 * scale; ++i)
      c.run(name, [&] {
        return fail_if(!appendix_check(s.gauge(pair, alg), s.mc(pair, alg), 4), "identity fails");
      });
  }
  c.result().max_k = 4;
}

void cohomology(SuiteReport& rep, Sampler& s, std::size_t scale) {
  const auto all = pairs();
  {
    Campaign c(rep, "cohomology", "golden dimensions");
    for (const auto& name : catalog_names()) {
      auto entry = catalog_entry(name);
      c.run(name, [&] {
        if (entry.h1_ce && h_ce(entry.pair, 1).dimension != *entry.h1_ce) return std::string("H^1_CE mismatch");
        if (entry.h1_weak && h1_ext(entry.pair).dimension != *entry.h1_weak) return std::string("H^1 ext mismatch");
        return std::string();
      });
    }
  }
  {
    Campaign c(rep, "cohomology", "h1_ext <= h1_ext0 = h_ce and representatives are cocycles");
    for (const auto& pair : all)
      c.run(pair.name(), [&] {
        auto w = h1_ext(pair), s0 = h1_ext0(pair), ce = h_ce(pair, 1);
        if (w.dimension > s0.dimension || s0.dimension != ce.dimension) return std::string("dimension inequality");
        if (rank(Matrix::from_rows([&] {
              std::vector<Vector> v;
              for (const auto& x : s0.image_basis) v.push_back(x.coeffs());
              for (const auto& x : ce.image_basis) v.push_back(x.coeffs());
              return v;
            }(), pair.omega_dim(1))) != ce.image_basis.size() ||
            s0.image_basis.size() != ce.image_basis.size())
          return std::string("image spaces differ");
        for (const auto& report : {w, s0, ce})
          for (const auto& x : report.representatives)
            if (!d_ce(x).is_zero()) return std::string("representative is not a cocycle");
        return std::string();
      });
  }
  {
    Campaign c(rep, "cohomology", "tangent consistency over dual numbers");
    const auto alg = algebra_by_name("dual");
    for (const auto& pair : all) {
      auto w = h1_ext(pair), s0 = h1_ext0(pair);
      for (std::size_t i = 0; i < 10 * scale; ++i)
        c.run(pair.name(), [&] {
          auto x = s.cocycle(pair);
          auto y = s.coin() ? x + d_ce(s.omega(pair, 0)) + ext_b1(pair, s.derivation(pair)) : s.cocycle(pair);
          AOmega ax(pair, alg, 1), ay(pair, alg, 1);
          ax.part(1) = x;
          ay.part(1) = y;
          auto mx = MCElement(ax).certify(), my = MCElement(ay).certify();
          bool weak = equiv_decide(mx, my, GaugeMode::weak).status == EquivResult::Status::equivalent;
          bool semi = equiv_decide(mx, my, GaugeMode::semistrict).status == EquivResult::Status::equivalent;
          if (weak != same_class(w, x, y)) return std::string("weak decision disagrees with H^1");
          return fail_if(semi != same_class(s0, x, y), "semistrict decision disagrees with H^1_0");
        });
    }
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t scale) {
  SuiteReport rep;
  rep.suite = std::string(name);
  rep.seed = seed;
  Sampler s(seed);
  const bool all = name == "all";
  bool known = all;
  if (all || name == "axioms") known = true, axioms(rep, s, scale);
  if (all || name == "brackets") known = true, brackets(rep, s, scale);
  if (all || name == "gauge-bridge") known = true, gauge_bridge(rep, s, scale);
  if (all || name == "appendix") known = true, appendix(rep, s, scale);
  if (all || name == "cohomology") known = true, cohomology(rep, s, scale);
  if (!known) throw ParseError("unknown suite '" + std::string(name) + "'");
  return rep;
}

}  // namespace liepair
