#include "oracles.hpp"

#include <liepair/errors.hpp>
#include <liepair/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace liepair;
using liepair::io::json;

TEST(IO, AlgebraRoundTrip) {
  for (const auto& n : {"dual", "t^4", "m2x3"}) {
    auto alg = algebra_by_name(n);
    EXPECT_EQ(io::artin_from_json(io::to_json(alg)), alg) << n;
  }
  EXPECT_EQ(io::resolve_algebra("t^3"), algebra_by_name("t^3"));
}

TEST(IO, PairRoundTrip) {
  for (const auto& n : catalog_names()) {
    auto pair = catalog_pair(n);
    EXPECT_EQ(io::pair_from_json(io::to_json(pair)), pair) << n;
  }
}

TEST(IO, LieFileFormat) {
  auto j = json::parse(R"({"dim": 3, "basis": ["h", "e", "f"],
    "brackets": [{"i": 0, "j": 1, "k": 1, "coeff": "2"}, {"i": 0, "j": 2, "k": 2, "coeff": "-2"},
                 {"i": 1, "j": 2, "k": 0, "coeff": "1"}], "subalgebra_rank": 2})");
  auto pair = io::pair_from_json(j);
  EXPECT_EQ(pair.lie().constants(), catalog_pair("sl2_borel").lie().constants());
  EXPECT_EQ(pair.rank(), 2u);
  j["brackets"][0]["coeff"] = "-2";
  EXPECT_THROW(io::pair_from_json(j), InvalidStructure);
  EXPECT_THROW(io::pair_from_json(json::parse(R"({"dim": "x"})")), ParseError);
}

TEST(IO, ElementRoundTrips) {
  Sampler s(1);
  auto alg = algebra_by_name("t^3");
  for (const auto& n : {"b3", "sl3_h_e12", "aff1"}) {
    auto pair = catalog_pair(n);
    auto x = s.omega(pair, 1);
    EXPECT_EQ(io::omega_from_json(pair, io::to_json(x)), x);
    auto xi = s.mc(pair, alg).value();
    EXPECT_EQ(io::aomega_from_json(pair, io::to_json(xi), std::nullopt), xi);
    auto delta = s.gauge(pair, alg, GaugeMode::semistrict);
    auto back = io::gauge_from_json(pair, io::to_json(delta), std::nullopt);
    EXPECT_EQ(back, delta);
    EXPECT_EQ(back.mode(), GaugeMode::semistrict);
  }
}

TEST(IO, CustomAlgebraInline) {
  auto alg = algebra_by_name("m2x2");
  auto pair = catalog_pair("b3");
  AOmega xi(pair, alg, 1);
  xi.part(2) = oracle::elementary(pair, 0, 1);
  auto j = io::to_json(xi);
  EXPECT_EQ(io::aomega_from_json(pair, j, std::nullopt), xi);
}

TEST(IO, FileErrors) {
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), ParseError);
  auto path = std::filesystem::temp_directory_path() / "liepair_bad.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(io::read_json_file(path), ParseError);
  std::filesystem::remove(path);
  EXPECT_THROW(io::resolve_pair("no_such_pair"), ParseError);
}

TEST(IO, ReportFields) {
  auto j = io::to_json(h1_ext(catalog_pair("b3")));
  EXPECT_EQ(j.at("dimension").get<std::size_t>(), 2u);
  EXPECT_EQ(j.at("representatives").size(), 2u);
}

TEST(Sampling, Deterministic) {
  auto pair = catalog_pair("sl3_h_e12");
  auto alg = algebra_by_name("t^3");
  Sampler a(99), b(99);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(a.mc(pair, alg), b.mc(pair, alg));
    EXPECT_EQ(a.gauge(pair, alg), b.gauge(pair, alg));
  }
}
