// liepair: command-line front end for the liepair core library.

#include <liepair/catalog.hpp>
#include <liepair/errors.hpp>
#include <liepair/io.hpp>
#include <liepair/sampling.hpp>
#include <liepair/suites.hpp>

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdint>
#include <optional>
#include <string>

namespace {

using namespace liepair;
using io::json;

enum Exit { ok = 0, negative = 1, io_error = 2, unknown = 3 };

struct Globals {
  std::string pair = "b3";
  std::string algebra = "dual";
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string mode = "weak";
};

bool table(const Globals& g) { return g.format == "table"; }

void emit(const json& j) { fmt::print("{}\n", j.dump(2)); }

MCElement load_mc(const LiePair& pair, const ArtinAlgebra& alg, const std::string& path, bool certify) {
  MCElement xi(io::aomega_from_json(pair, io::read_json_file(path), alg));
  return certify ? xi.certify() : xi;
}

int cmd_tangent(const Globals& g, const std::string& functor, std::size_t degree) {
  const auto pair = io::resolve_pair(g.pair);
  CohomologyReport rep;
  if (functor == "ce") rep = h_ce(pair, degree);
  else if (functor == "weak") rep = h1_ext(pair);
  else if (functor == "semistrict") rep = h1_ext0(pair);
  else throw ParseError("unknown functor '" + functor + "'");
  if (table(g)) {
    fmt::print("pair       {}\ncomplex    {}\ndegree     {}\ndimension  {}\n", pair.name(), to_string(rep.complex),
               rep.degree, rep.dimension);
    for (const auto& x : rep.representatives) fmt::print("rep        {}\n", io::to_json(x).dump());
  } else {
    emit(io::to_json(rep));
  }
  return ok;
}

int cmd_mc(const Globals& g, const std::string& sub, const std::string& element, std::size_t order) {
  const auto pair = io::resolve_pair(g.pair);
  const auto alg = io::resolve_algebra(g.algebra);
  if (sub == "random") {
    Sampler s(g.seed);
    auto xi = s.mc(pair, alg);
    emit({{"verified", xi.verified()}, {"seed", g.seed}, {"element", io::to_json(xi.value())}});
    return ok;
  }
  if (element.empty()) throw ParseError("--element is required");
  auto xi = load_mc(pair, alg, element, false);
  if (sub == "check") {
    auto res = mc_residual(xi);
    bool pass = res.is_zero();
    if (table(g)) fmt::print("maurer-cartan  {}\n", pass ? "pass" : "fail");
    else emit({{"maurer_cartan", pass}, {"residual", io::to_json(res)}});
    return pass ? ok : negative;
  }
  if (sub == "extend") {
    auto ext = mc_extend(xi.value(), order);
    if (ext.extended) {
      emit({{"extended", true}, {"order", order}, {"element", io::to_json(*ext.extended)}});
      return ok;
    }
    emit({{"extended", false},
          {"order", order},
          {"obstruction", {{"m_index", ext.obstruction->alpha}, {"cocycle", io::to_json(ext.obstruction->cocycle)}}}});
    return negative;
  }
  throw ParseError("unknown mc subcommand '" + sub + "'");
}

int cmd_gauge(const Globals& g, const std::string& sub, const std::string& element, const std::string& param,
              const std::string& target) {
  const auto pair = io::resolve_pair(g.pair);
  const auto alg = io::resolve_algebra(g.algebra);
  if (element.empty()) throw ParseError("--element is required");
  auto xi = load_mc(pair, alg, element, true);
  if (sub == "act") {
    if (param.empty()) throw ParseError("--param is required");
    auto delta = io::gauge_from_json(pair, io::read_json_file(param), alg);
    emit(io::to_json(gauge_act(delta, xi).value()));
    return ok;
  }
  if (sub == "solve") {
    if (target.empty()) throw ParseError("--target is required");
    auto eta = load_mc(pair, alg, target, true);
    auto res = equiv_decide(xi, eta, parse_gauge_mode(g.mode));
    switch (res.status) {
      case EquivResult::Status::equivalent:
        emit({{"result", "equivalent"},
              {"mode", g.mode},
              {"delta", io::to_json(*res.delta)},
              {"automorphism", io::to_json(*res.witness)}});
        return ok;
      case EquivResult::Status::not_equivalent:
        emit({{"result", "not_equivalent"}, {"mode", g.mode}, {"order", res.order}});
        return negative;
      case EquivResult::Status::unknown:
        emit({{"result", "not_found_at_order"}, {"mode", g.mode}, {"order", res.order}});
        return unknown;
    }
  }
  throw ParseError("unknown gauge subcommand '" + sub + "'");
}

int cmd_catalog(const Globals& g, bool show) {
  if (show) {
    auto e = catalog_entry(g.pair);
    json j = io::to_json(e.pair);
    j["note"] = e.note;
    j["matched"] = is_matched(e.pair);
    emit(j);
    return ok;
  }
  if (table(g)) {
    for (const auto& n : catalog_names()) {
      auto e = catalog_entry(n);
      fmt::print("{:<14} dim {}  rank {}  {}  {}\n", n, e.pair.dim(), e.pair.rank(),
                 is_matched(e.pair) ? "matched" : "       ", e.note);
    }
    return ok;
  }
  json arr = json::array();
  for (const auto& n : catalog_names()) {
    auto e = catalog_entry(n);
    arr.push_back({{"name", n}, {"dim", e.pair.dim()}, {"rank", e.pair.rank()}, {"matched", is_matched(e.pair)}});
  }
  emit(arr);
  return ok;
}

int cmd_verify(const Globals& g, const std::string& suite, std::size_t scale) {
  auto rep = run_suite(suite, g.seed, scale);
  if (table(g)) {
    for (const auto& p : rep.properties)
      fmt::print("{:<5} {:<11} {:<60} n={}{}\n", p.passed ? "pass" : "FAIL", p.module, p.property, p.instances,
                 p.witness.empty() ? "" : "  " + p.witness);
  } else {
    json props = json::array();
    for (const auto& p : rep.properties) {
      json j = {{"module", p.module}, {"property", p.property}, {"instances", p.instances}, {"passed", p.passed}};
      if (!p.witness.empty()) j["witness"] = p.witness;
      if (p.max_k) j["max_k"] = p.max_k;
      props.push_back(std::move(j));
    }
    emit({{"suite", rep.suite}, {"seed", rep.seed}, {"passed", rep.ok()}, {"properties", std::move(props)}});
  }
  return rep.ok() ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of Lie algebra pairs over local Artinian algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--pair", g.pair, "catalog name or pair JSON file");
  app.add_option("--algebra", g.algebra, "dual, t^k, m2x<r> or algebra JSON file");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--format", g.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--mode", g.mode, "weak, semistrict or matched")->check(CLI::IsMember({"weak", "semistrict", "matched"}));
  app.fallthrough();

  std::string functor = "weak";
  std::size_t degree = 1;
  auto* tangent = app.add_subcommand("tangent", "tangent cohomology of a pair");
  tangent->add_option("--functor", functor, "weak, semistrict or ce")
      ->check(CLI::IsMember({"weak", "semistrict", "ce"}));
  tangent->add_option("--degree", degree, "degree for the ce functor");

  std::string mc_sub, element, param, target;
  std::size_t order = 2;
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan elements");
  mc->add_option("action", mc_sub, "check, extend or random")->required()->check(CLI::IsMember({"check", "extend", "random"}));
  mc->add_option("--element", element, "MC element JSON file");
  mc->add_option("--order", order, "extend from MC modulo m^order");

  std::string gauge_sub;
  auto* gauge = app.add_subcommand("gauge", "gauge action and equivalence");
  gauge->add_option("action", gauge_sub, "act or solve")->required()->check(CLI::IsMember({"act", "solve"}));
  gauge->add_option("--element", element, "source MC element JSON file");
  gauge->add_option("--param", param, "gauge parameter JSON file");
  gauge->add_option("--target", target, "target MC element JSON file");

  bool show = false;
  auto* catalog = app.add_subcommand("catalog", "list built-in pairs");
  catalog->add_flag("--show", show, "print the pair selected by --pair");

  std::string suite = "all";
  std::size_t scale = 1;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", suite, "axioms, brackets, gauge-bridge, appendix, cohomology or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--scale", scale, "instance count multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : io_error;
  }

  try {
    if (*tangent) return cmd_tangent(g, functor, degree);
    if (*mc) return cmd_mc(g, mc_sub, element, order);
    if (*gauge) return cmd_gauge(g, gauge_sub, element, param, target);
    if (*catalog) return cmd_catalog(g, show);
    if (*verify) return cmd_verify(g, suite, scale);
  } catch (const NotMaurerCartan& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return negative;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return io_error;
  }
  return io_error;
}
