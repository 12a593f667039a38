#include <cmath>

#include "doctest.h"
#include "superkit/components.hpp"
#include "superkit/suites.hpp"

using namespace superkit;

namespace {

MomentumQ mq(const Q& a, const Q& b, const Q& c, const Q& d) { return MomentumQ{{a, b, c, d}}; }

ChiralData<CQ> scalar_only(const MomentumQ& q, const CQ& a) {
  ChiralData<CQ> c;
  c.phi.add(q, a);
  return c;
}

}  // namespace

TEST_CASE("chiral expansion") {
  auto one = chiral_expand(scalar_only(MomentumQ{}, CQ(1)));
  CHECK(one.waves.size() == 1);
  for (int m = 1; m < 16; ++m) CHECK(one.waves[0].v[m].is_zero());
  CHECK(one.waves[0].v[0] == CQ(1));

  MomentumQ q = mq(3, 1, 2, -1);
  auto f = chiral_expand(scalar_only(q, CQ(1)));
  auto G = gamma_low<CQ>(q);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) CHECK(f.waves[0].v[(1 << (a - 1)) | (1 << (b + 1))] == G[a - 1][b - 1]);
  CHECK(f.waves[0].v[15] == CQ(-minkowski_norm2(q)));
  CHECK(is_chiral(f));

  Rng rng(89);
  for (int t = 0; t < 10; ++t) {
    ChiralData<CQ> c;
    MomentumQ k = rng.momentum();
    c.phi.add(k, rng.complex());
    c.psi[0].add(k, rng.complex());
    c.psi[1].add(-k, rng.complex());
    c.F.add(k, rng.complex());
    auto g = chiral_expand(c);
    CHECK(is_chiral(g));
    CHECK_FALSE(is_antichiral(g));
    auto back = chiral_components(g);
    CHECK((back.phi - c.phi).is_zero());
    CHECK((back.psi[1] - c.psi[1]).is_zero());
    CHECK((back.F - c.F).is_zero());
    CHECK((conjugate_sf(conjugate_sf(g)) - g).is_zero());
    CHECK(is_antichiral(conjugate_sf(g)));
  }
}

TEST_CASE("generated solutions solve the superfield equation exactly") {
  Rng rng(97);
  for (int t = 0; t < 5; ++t) {
    Q m(rng.integer(1, 4), rng.integer(1, 3));
    m.canonicalize();
    MomentumQ p = t ? rng.on_shell(m) : mq(m, 0, 0, 0);
    auto c = solution_generator<CQ>(p, CQ(m), rng.complex(), {rng.complex(), rng.complex()});
    CHECK(component_residual(c, CQ(m)).is_zero());
    auto f = chiral_expand(c);
    CHECK(is_chiral(f));
    CHECK(wz_operator(f, CQ(m)).is_zero());
    CHECK(component_reduce(f, CQ(m)).is_zero());
  }
  CHECK_THROWS_AS(solution_generator<CQ>(mq(2, 0, 0, 0), CQ(1), CQ(1), {CQ(1), CQ(0)}), OffOrbit);
  CHECK_THROWS_AS(solution_generator<CQ>(mq(-1, 0, 0, 0), CQ(1), CQ(1), {CQ(1), CQ(0)}), NonPositiveEnergy);
}

TEST_CASE("rest-frame solution pairs the spinors across frequencies") {
  auto c = solution_generator<CQ>(mq(1, 0, 0, 0), CQ(1), CQ(1), {CQ(1), CQ(0)});
  CHECK(component_residual(c, CQ(1)).is_zero());
  // ψ+ = u at +p
  for (auto& t : c.psi[0].terms)
    if (t.first == mq(1, 0, 0, 0)) CHECK(t.second == CQ(1));
}

TEST_CASE("wz_operator away from solutions") {
  MomentumQ q = mq(2, 0, 0, 0);
  auto f = chiral_expand(scalar_only(q, CQ(1)));
  CHECK_FALSE(wz_operator(f, CQ(1)).is_zero());
  auto r = component_reduce(f, CQ(1));
  CHECK_FALSE(r.kg.is_zero());
  // m = 0, constant superfield
  CHECK(wz_operator(chiral_expand(scalar_only(MomentumQ{}, CQ(1))), CQ(0)).is_zero());
  // not chiral
  SuperFunction<CQ> g;
  g.add(q, 4, CQ(1));
  CHECK_THROWS_AS(wz_operator(g, CQ(1)), NotChiral);
}

TEST_CASE("component residuals") {
  Q m(1);
  auto on = component_residual(scalar_only(mq(Q(5, 4), Q(3, 4), 0, 0), CQ(m)), CQ(m));
  CHECK(on.kg.is_zero());
  Rng rng(101);
  ChiralData<CQ> c;
  MomentumQ k = rng.momentum();
  c.phi.add(k, CQ(1));
  c.psi[0].add(k, CQ(1));
  auto off = component_residual(c, CQ(3));
  CHECK(off.max_abs() > 0);
  CHECK_FALSE(off.dirac[0].is_zero());
}

TEST_CASE("numeric solutions and boosted momenta") {
  const double m = 1.0;
  Momentum p{{std::cosh(1.0), std::sinh(1.0), 0, 0}};
  auto c = solution_generator<cd>(p, cd(m), cd(0.5, 0.25), {cd(1), cd(0, 1)});
  CHECK(component_residual(c, cd(m)).max_abs() < 1e-12);
  CHECK(wz_operator(chiral_expand(c), cd(m), 1e-12).is_zero(1e-12));
  CHECK_THROWS_AS(solution_generator<cd>(Momentum{{2, 0, 0, 0}}, cd(1), cd(1), {cd(1), cd(0)}), OffOrbit);
  CHECK_THROWS_AS(solution_generator<cd>(p, cd(-1), cd(1), {cd(1), cd(0)}), std::invalid_argument);
}

TEST_CASE("grid residuals") {
  Grid4 g;
  g.n = 5;
  g.h = 0.1;
  GridChiral zero{g, std::vector<cd>(g.size()), std::vector<cd>(g.size()), std::vector<cd>(g.size()),
                  std::vector<cd>(g.size())};
  GridResidual z = grid_residual(zero, 1.0);
  CHECK(z.max_kg == 0);
  CHECK(z.max_dirac == 0);
  CHECK(z.max_f == 0);

  auto c = solution_generator<cd>(Momentum{{1.25, 0.75, 0, 0}}, cd(1), cd(1), {cd(1), cd(0)});
  GridResidual r1 = grid_residual(sample(c, g), 1.0);
  g.h = 0.05;
  GridResidual r2 = grid_residual(sample(c, g), 1.0);
  CHECK(r1.max_kg / r2.max_kg == doctest::Approx(4.0).epsilon(0.05));
  CHECK(r1.max_dirac / r2.max_dirac == doctest::Approx(4.0).epsilon(0.05));
  CHECK(r2.max_f < 1e-12);

  // off shell: residual ≈ |m² - ‖q‖²| · amplitude
  ChiralData<cd> off;
  off.phi.add(Momentum{{2, 0, 0, 0}}, cd(1));
  g.h = 0.01;
  CHECK(grid_residual(sample(off, g), 1.0).max_kg == doctest::Approx(3.0).epsilon(1e-3));

  g.n = 4;
  CHECK_THROWS_AS(sample(c, g), GridTooSmall);
}

TEST_CASE("representability over small Grassmann algebras") {
  MomentumQ p = mq(Q(5, 4), Q(3, 4), 0, 0);
  auto r0 = wz_equivalence_check(0, p, Q(1));
  CHECK(r0.passed());
  CHECK(r0.unknowns == 16);
  CHECK(r0.solution_dim == 8);
  CHECK(r0.scalar_bosonic_dim + r0.scalar_fermionic_dim == r0.solution_dim);
  auto r2 = wz_equivalence_check(2, p, Q(1));
  CHECK(r2.passed());
  CHECK(r2.solution_dim == r2.predicted_dim);
  // dim over Λ_N: each parity sector contributes dim E_i · 2^{N-1}
  CHECK(r2.solution_dim == (r2.scalar_bosonic_dim + r2.scalar_fermionic_dim) * 2);
  CHECK_THROWS_AS(wz_equivalence_check(1, mq(2, 0, 0, 0), Q(1)), OffOrbit);
}
