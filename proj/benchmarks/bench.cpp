#include <benchmark/benchmark.h>

#include <cmath>

#include "superkit/components.hpp"
#include "superkit/suites.hpp"
#include "superkit/symbols.hpp"

using namespace superkit;

static void BM_build_d2(benchmark::State& state) {
  Rng rng(1);
  PairingMatrix B = rng.invertible_pairing();
  const auto eps = SymplecticForm::ledger();
  for (auto _ : state) benchmark::DoNotOptimize(d2_composed(B, eps));
}
BENCHMARK(BM_build_d2);

static void BM_chiral_nullspace(benchmark::State& state) {
  Rng rng(2);
  PairingMatrix B = rng.invertible_pairing();
  for (auto _ : state) benchmark::DoNotOptimize(chiral_nullspace(B));
}
BENCHMARK(BM_chiral_nullspace);

static void BM_propagate_d2(benchmark::State& state) {
  Rng rng(3);
  Momentum p = rng.on_shell_numeric(1.0);
  EndoWd u = zeta_d2(Momentum{{1, 0, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(propagate(u, p, 1.0));
}
BENCHMARK(BM_propagate_d2);

static void BM_wz_operator(benchmark::State& state) {
  MomentumQ p{{Q(5, 4), Q(3, 4), Q(0), Q(0)}};
  auto f = chiral_expand(solution_generator<CQ>(p, CQ(1), CQ(1), {CQ(1), CQ(0)}));
  for (auto _ : state) benchmark::DoNotOptimize(wz_operator(f, CQ(1)));
}
BENCHMARK(BM_wz_operator);

static void BM_grid_residual(benchmark::State& state) {
  auto c = solution_generator<cd>(Momentum{{std::cosh(1.0), std::sinh(1.0), 0, 0}}, cd(1), cd(1), {cd(1), cd(0)});
  Grid4 g;
  g.n = static_cast<int>(state.range(0));
  g.h = 0.05;
  GridChiral s = sample(c, g);
  for (auto _ : state) benchmark::DoNotOptimize(grid_residual(s, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_grid_residual)->Arg(5)->Arg(9)->Arg(13);

static void BM_wz_equivalence(benchmark::State& state) {
  MomentumQ p{{Q(5, 4), Q(3, 4), Q(0), Q(0)}};
  for (auto _ : state) benchmark::DoNotOptimize(wz_equivalence_check(static_cast<int>(state.range(0)), p, Q(1)));
}
BENCHMARK(BM_wz_equivalence)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
