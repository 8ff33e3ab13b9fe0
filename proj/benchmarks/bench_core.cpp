#include <liepair/catalog.hpp>
#include <liepair/cohomology.hpp>
#include <liepair/deform.hpp>
#include <liepair/sampling.hpp>

#include <benchmark/benchmark.h>

using namespace liepair;

namespace {

const char* pair_name(std::int64_t i) {
  static const char* names[] = {"b3", "sl3_h_e12", "sl2_borel"};
  return names[i];
}

void BM_Rank(benchmark::State& state) {
  Sampler s(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.scalar();
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(24)->Arg(48);

void BM_DerivationSpace(benchmark::State& state) {
  auto lie = catalog_pair(pair_name(state.range(0))).lie();
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(lie));
  state.SetLabel(pair_name(state.range(0)));
}
BENCHMARK(BM_DerivationSpace)->DenseRange(0, 2);

void BM_TangentWeak(benchmark::State& state) {
  auto pair = catalog_pair(pair_name(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h1_ext(pair));
  state.SetLabel(pair_name(state.range(0)));
}
BENCHMARK(BM_TangentWeak)->DenseRange(0, 2);

void BM_MCResidual(benchmark::State& state) {
  Sampler s(2);
  auto pair = catalog_pair("sl3_h_e12");
  auto alg = algebra_by_name("t^" + std::to_string(state.range(0)));
  auto xi = s.omega_m(pair, alg);
  for (auto _ : state) benchmark::DoNotOptimize(mc_residual(xi));
}
BENCHMARK(BM_MCResidual)->Arg(3)->Arg(5);

void BM_GaugeAct(benchmark::State& state) {
  Sampler s(3);
  auto pair = catalog_pair("sl3_h_e12");
  auto alg = algebra_by_name("t^" + std::to_string(state.range(0)));
  auto xi = s.mc(pair, alg);
  auto delta = s.gauge(pair, alg);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_act(delta, xi));
}
BENCHMARK(BM_GaugeAct)->Arg(3)->Arg(5);

void BM_ActOnSd(benchmark::State& state) {
  Sampler s(4);
  auto pair = catalog_pair("sl3_h_e12");
  auto alg = algebra_by_name("t^" + std::to_string(state.range(0)));
  auto xi = s.mc(pair, alg);
  auto pi = s.automorphism(pair, alg);
  for (auto _ : state) benchmark::DoNotOptimize(act_on_sd(pi, xi.value()));
}
BENCHMARK(BM_ActOnSd)->Arg(3)->Arg(5);

void BM_GaugeSolve(benchmark::State& state) {
  Sampler s(5);
  auto pair = catalog_pair("b3");
  auto alg = algebra_by_name("t^3");
  auto xi = s.mc(pair, alg);
  auto eta = gauge_act(s.gauge(pair, alg), xi);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_solve(xi, eta, GaugeMode::weak));
}
BENCHMARK(BM_GaugeSolve);

}  // namespace

BENCHMARK_MAIN();
