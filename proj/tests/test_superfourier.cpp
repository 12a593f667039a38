#include "doctest.h"
#include "oracles.hpp"
#include "superkit/suites.hpp"
#include "superkit/superfourier.hpp"
#include "superkit/symbols.hpp"

using namespace superkit;

namespace {

Multivector mono(int mask, const CQ& c = CQ(1)) { return c * Multivector::basis(mask); }

MomentumQ mq(long a, long b, long c, long d) { return MomentumQ{{Q(a), Q(b), Q(c), Q(d)}}; }

SuperFunction<CQ> wave(const MomentumQ& k, int mask, const CQ& a = CQ(1)) {
  SuperFunction<CQ> f;
  f.add(k, mask, a);
  return f;
}

bool same(const SuperFunction<CQ>& a, const SuperFunction<CQ>& b) { return (a - b).is_zero(); }

}  // namespace

TEST_CASE("hodge star examples") {
  CHECK(hodge_star(mono(0)) == mono(15));
  CHECK(hodge_star(mono(1)) == mono(1 | 12, CQ::i()));
  CHECK(hodge_star(mono(1 | 4)) == mono(1 | 4, CQ(-1)));
  Rng rng(61);
  for (int k = 0; k < 10; ++k) {
    Multivector v = rng.multivector();
    CHECK(hodge_star_inverse(hodge_star(v)) == v);
  }
}

TEST_CASE("super Fourier transform of single waves") {
  MomentumQ q = mq(2, 1, 0, -1);
  auto f = super_ft(wave(q, 1));
  CHECK(f.side == Side::Momentum);
  CHECK(f.component(13).terms.size() == 1);
  CHECK(f.component(13).terms[0].first == q);
  CHECK(f.component(13).terms[0].second == CQ::i());
  auto one = super_ft(wave(MomentumQ{}, 0));
  CHECK(one.component(15).terms[0].second == CQ(1));
  CHECK_THROWS_AS(super_ft(f), SideMismatch);
}

TEST_CASE("Berezin integral and body") {
  MomentumQ q = mq(1, 0, 1, 0);
  auto g = PlaneWaveFn<CQ>::wave(q, CQ(3, 2));
  SuperFunction<CQ> top;
  top.add(q, 15, CQ(3, 2));
  CHECK((berezin_integral(top) - g).is_zero());
  CHECK(berezin_integral(wave(q, 1)).is_zero());
  Rng rng(67);
  SuperFunction<CQ> f;
  for (int m = 0; m < 16; ++m) {
    f.add(q, m, rng.complex());
    f.add(mq(0, 1, 0, 0), m, rng.complex());
  }
  CHECK((berezin_integral(super_ft(f)) - body_restriction(f)).is_zero());
  CHECK((berezin_integral(f + f) - (berezin_integral(f) + berezin_integral(f))).is_zero());
}

TEST_CASE("covariant derivatives on x-independent inputs") {
  CHECK(apply_D(1, wave(MomentumQ{}, 2)).is_zero());
  CHECK(same(apply_D(1, wave(MomentumQ{}, 1)), wave(MomentumQ{}, 0)));
}

TEST_CASE("brackets of D and Q on a plane wave") {
  Rng rng(71);
  MomentumQ k = rng.momentum();
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      Op16<CQ> gp;
      for (int mu = 0; mu < 4; ++mu) {
        MomentumQ e;
        e.p[mu] = 1;
        gp = gp + gamma_low<CQ>(e)[a - 1][b - 1] * op_P<CQ>(mu, k);
      }
      auto dd = op_D<CQ>(a, k) * op_Dbar<CQ>(b, k) + op_Dbar<CQ>(b, k) * op_D<CQ>(a, k);
      auto qq = op_Q<CQ>(a, k) * op_Qbar<CQ>(b, k) + op_Qbar<CQ>(b, k) * op_Q<CQ>(a, k);
      auto qd = op_Q<CQ>(a, k) * op_Dbar<CQ>(b, k) + op_Dbar<CQ>(b, k) * op_Q<CQ>(a, k);
      for (int m = 0; m < 16; ++m) {
        Vec16<CQ> v{};
        v[m] = CQ(1);
        CHECK(dd.apply(v) == (CQ(2) * gp).apply(v));
        CHECK(qq.apply(v) == (CQ(-2) * gp).apply(v));
        CHECK(qd.apply(v) == Vec16<CQ>{});
      }
    }
}

TEST_CASE("exchange identities") {
  // ⋆(∂θ¹/∂θ¹) = ⋆1 = top, and i ε_{12} t² ⋆θ¹ = i t² (i t1 tb1 tb2) = top
  Multivector lhs = hodge_star(mono(0));
  Multivector rhs = oracle::wedge(mono(2, CQ::i() * CQ(ledger::kEpsLower12)), hodge_star(mono(1)));
  CHECK(lhs == rhs);
  CHECK(exchange_check(mono(0)).exact_zero);
  Rng rng(73);
  for (int t = 0; t < 10; ++t) CHECK(exchange_check(rng.multivector()).exact_zero);
}

TEST_CASE("intertwining of D² and Dbar_a with the symbols") {
  Rng rng(79);
  const Op16<CQ> H = hodge_op<CQ>();
  for (int t = 0; t < 20; ++t) {
    MomentumQ k = rng.momentum();
    Vec16<CQ> v{};
    for (auto& x : v) x = rng.complex(5, 4);
    CHECK(H.apply(op_D2<CQ>(k).apply(v)) == (CQ(-1) * op16_from<CQ>(zeta_d2(k))).apply(H.apply(v)));
    for (int a = 1; a <= 2; ++a) {
      Op16<CQ> s;
      for (int b = 1; b <= 2; ++b) s = s + (CQ::i() * eps_lower<CQ>(a, b)) * op16_from<CQ>(zeta_dbar(k, b));
      CHECK(H.apply(op_Dbar<CQ>(a, k).apply(v)) == s.apply(H.apply(v)));
    }
  }
}

TEST_CASE("conjugation") {
  Rng rng(83);
  SuperFunction<CQ> f;
  for (int m = 0; m < 16; ++m) f.add(rng.momentum(), m, rng.complex());
  CHECK(same(conjugate_sf(conjugate_sf(f)), f));
  auto c = conjugate_sf(wave(mq(1, 2, 3, 4), 0, CQ::i()));
  CHECK(same(c, wave(mq(-1, -2, -3, -4), 0, -CQ::i())));
}

TEST_CASE("group law") {
  const int N = 2;
  SuperPoint u = SuperPoint::zero(N);
  u.v[0] = AuxGrassmann::scalar(N, CQ(2));
  u.s[0] = AuxGrassmann::generator(N, 0);
  SuperPoint w = SuperPoint::zero(N);
  w.v[1] = AuxGrassmann::scalar(N, CQ(5));
  CHECK(group_law(u, SuperPoint::zero(N)) == u);
  // even translations commute: coordinate-wise sum
  SuperPoint sum = group_law(w, w);
  CHECK(sum.v[1] == AuxGrassmann::scalar(N, CQ(10)));
  CHECK(group_law(u, group_inverse(u)) == SuperPoint::zero(N));
}
