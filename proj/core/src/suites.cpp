#include "superkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "superkit/components.hpp"
#include "superkit/generic.hpp"
#include "superkit/superfourier.hpp"
#include "superkit/symbols.hpp"

namespace superkit {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double Report::max_error() const {
  double m = 0;
  for (auto& c : checks) m = std::max(m, c.max_error);
  return m;
}

const Check* Report::find(const std::string& id) const {
  for (auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

// ---- Rng ----------------------------------------------------------------------

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

Q Rng::rational(int max_num, int max_den) {
  Q q(integer(-max_num, max_num), integer(1, max_den));
  q.canonicalize();
  return q;
}

CQ Rng::complex(int max_num, int max_den) { return CQ(rational(max_num, max_den), rational(max_num, max_den)); }

PairingMatrix Rng::invertible_pairing() {
  for (;;) {
    PairingMatrix B;
    for (auto& row : B)
      for (auto& x : row) x = complex(5, 4);
    if (!mat2_det(B).is_zero()) return B;
  }
}

MomentumQ Rng::momentum() {
  MomentumQ p;
  for (auto& x : p.p) x = rational(9, 5);
  return p;
}

MomentumQ Rng::on_shell(const Q& mass) {
  Q m = mass;
  m.canonicalize();
  // unit vector n = (2a, 2b, 1-a²-b²)/(1+a²+b²), rapidity parameter s ∈ (-1, 1)
  Q a = rational(4, 5), b = rational(4, 5);
  Q s(integer(-7, 7), 8);
  s.canonicalize();
  Q den = 1 + a * a + b * b;
  std::array<Q, 3> n{2 * a / den, 2 * b / den, (1 - a * a - b * b) / den};
  Q g = 1 - s * s;
  MomentumQ p;
  p.p[0] = m * (1 + s * s) / g;
  for (int k = 0; k < 3; ++k) p.p[k + 1] = m * 2 * s / g * n[k];
  for (auto& x : p.p) x.canonicalize();
  return p;
}

Momentum Rng::on_shell_numeric(double m, double max_rapidity) {
  double eta = uniform(-max_rapidity, max_rapidity);
  double th = uniform(0, M_PI), ph = uniform(0, 2 * M_PI);
  Momentum p;
  p.p = {m * std::cosh(eta), m * std::sinh(eta) * std::sin(th) * std::cos(ph),
         m * std::sinh(eta) * std::sin(th) * std::sin(ph), m * std::sinh(eta) * std::cos(th)};
  return p;
}

Mat2d Rng::spin_element(double scale) {
  Mat2d X;
  cd a(uniform(-scale, scale), uniform(-scale, scale));
  X << a, cd(uniform(-scale, scale), uniform(-scale, scale)), cd(uniform(-scale, scale), uniform(-scale, scale)), -a;
  return sl2_exp(X);
}

Multivector Rng::multivector() {
  Multivector m;
  for (auto& x : m.c) x = complex(6, 5);
  return m;
}

// ---- helpers ------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  double err = 0;
  std::string lhs, rhs;
};

void run(Report& r, const std::string& id, const std::function<Outcome()>& fn) {
  auto t0 = Clock::now();
  Outcome o = fn();
  Check c;
  c.id = id;
  c.pass = o.pass;
  c.max_error = o.err;
  c.lhs = o.lhs;
  c.rhs = o.rhs;
  c.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  r.checks.push_back(std::move(c));
}

// exact comparison, recording the largest entrywise discrepancy
void compare(Outcome& o, const EndoW& x, const EndoW& y) {
  for (int k = 0; k < kDimW * kDimW; ++k) {
    CQ d = x.a[k] - y.a[k];
    if (!d.is_zero()) {
      o.pass = false;
      o.err = std::max(o.err, std::abs(d.to_complex()));
    }
  }
}
void compare(Outcome& o, const Op16<CQ>& x, const Op16<CQ>& y) {
  for (int k = 0; k < kDimW * kDimW; ++k) {
    CQ d = x.a[k] - y.a[k];
    if (!d.is_zero()) {
      o.pass = false;
      o.err = std::max(o.err, std::abs(d.to_complex()));
    }
  }
}
void compare(Outcome& o, const Vec16<CQ>& x, const Vec16<CQ>& y) {
  for (int k = 0; k < kDimW; ++k) {
    CQ d = x[k] - y[k];
    if (!d.is_zero()) {
      o.pass = false;
      o.err = std::max(o.err, std::abs(d.to_complex()));
    }
  }
}
void compare(Outcome& o, const Multivector& x, const Multivector& y) { compare(o, x.c, y.c); }
void compare(Outcome& o, const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y, double tol) {
  double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  double e = (x - y).cwiseAbs().maxCoeff() / scale;
  o.err = std::max(o.err, e);
  if (!(e <= tol)) o.pass = false;
}

EndoW scaled_identity(const CQ& k) { return k * EndoW::identity(); }

std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

Op16<CQ> op(const EndoW& e) { return op16_from<CQ>(e); }

}  // namespace

// ---- algebra ------------------------------------------------------------------

namespace {

// Operators at one pairing, built once per suite run.
struct PairingOps {
  std::array<EndoW, 2> ep, em, ip, im, d, db, q, qb;
  explicit PairingOps(const PairingMatrix& B) {
    for (int a = 1; a <= 2; ++a) {
      ep[a - 1] = op_ext_plus(a);
      em[a - 1] = op_ext_minus(a);
      ip[a - 1] = op_int_plus(a, B);
      im[a - 1] = op_int_minus(a, B);
      d[a - 1] = build_d(a, B);
      db[a - 1] = build_dbar(a, B);
      q[a - 1] = build_q(a, B);
      qb[a - 1] = build_qbar(a, B);
    }
  }
};

}  // namespace

Report suite_algebra(std::uint64_t seed, int random_pairings) {
  Report r;
  r.suite = "algebra";
  r.seed = seed;
  r.tol = 0;
  Rng rng(seed);
  std::vector<PairingMatrix> Bs{mat2_identity()};
  for (int k = 0; k < random_pairings; ++k) Bs.push_back(rng.invertible_pairing());
  const SymplecticForm eps = SymplecticForm::ledger();
  const std::string over = "B = Id and " + std::to_string(random_pairings) + " random invertible B";
  // built lazily so that the first check pays for it
  std::vector<PairingOps> ops;
  auto all_ops = [&]() -> const std::vector<PairingOps>& {
    if (ops.empty())
      for (auto& B : Bs) ops.emplace_back(B);
    return ops;
  };

  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      run(r, "anticomm.i_t.e_tb." + idx(a, b), [&] {
        Outcome o{true, 0, "{i_t" + std::to_string(a) + ", e_tb" + std::to_string(b) + "}", "B[a][b] Id, " + over};
        for (std::size_t n = 0; n < Bs.size(); ++n)
          compare(o, anticommutator(all_ops()[n].ip[a - 1], all_ops()[n].em[b - 1]),
                  scaled_identity(Bs[n][a - 1][b - 1]));
        return o;
      });
      run(r, "anticomm.i_tb.e_t." + idx(a, b), [&] {
        Outcome o{true, 0, "{i_tb" + std::to_string(b) + ", e_t" + std::to_string(a) + "}", "B[a][b] Id, " + over};
        for (std::size_t n = 0; n < Bs.size(); ++n)
          compare(o, anticommutator(all_ops()[n].im[b - 1], all_ops()[n].ep[a - 1]),
                  scaled_identity(Bs[n][a - 1][b - 1]));
        return o;
      });
      run(r, "anticomm.d.dbar." + idx(a, b), [&] {
        Outcome o{true, 0, "{d_" + std::to_string(a) + ", dbar_" + std::to_string(b) + "}", "2 B[a][b] Id, " + over};
        for (std::size_t n = 0; n < Bs.size(); ++n)
          compare(o, anticommutator(all_ops()[n].d[a - 1], all_ops()[n].db[b - 1]),
                  scaled_identity(CQ(2) * Bs[n][a - 1][b - 1]));
        return o;
      });
      run(r, "anticomm.q.qbar." + idx(a, b), [&] {
        Outcome o{true, 0, "{q_" + std::to_string(a) + ", qbar_" + std::to_string(b) + "}", "-2 B[a][b] Id, " + over};
        for (std::size_t n = 0; n < Bs.size(); ++n)
          compare(o, anticommutator(all_ops()[n].q[a - 1], all_ops()[n].qb[b - 1]),
                  scaled_identity(CQ(-2) * Bs[n][a - 1][b - 1]));
        return o;
      });
    }

  run(r, "anticomm.nilpotent", [&] {
    Outcome o{true, 0, "{e,e}, {i,i}, {d_a,d_b}, {dbar_a,dbar_b}", "0, " + over};
    const EndoW zero{};
    for (auto& P : all_ops()) {
      std::vector<const EndoW*> es{&P.ep[0], &P.ep[1], &P.em[0], &P.em[1]};
      std::vector<const EndoW*> is{&P.ip[0], &P.ip[1], &P.im[0], &P.im[1]};
      // {x,y} is symmetric, so pairs with j >= i suffice
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
          compare(o, anticommutator(*es[i], *es[j]), zero);
          compare(o, anticommutator(*is[i], *is[j]), zero);
        }
      for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b) {
          compare(o, anticommutator(P.d[a], P.d[b]), zero);
          compare(o, anticommutator(P.db[a], P.db[b]), zero);
        }
    }
    return o;
  });

  // supersymmetric invariance: q-type operators graded-commute with d-type operators
  const char* qn[2] = {"q", "qbar"};
  const char* dn[2] = {"d", "dbar"};
  for (int qs = 0; qs < 2; ++qs)
    for (int ds = 0; ds < 2; ++ds)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          std::string id = std::string("susy.[") + qn[qs] + "," + dn[ds] + "]." + idx(a, b);
          run(r, id, [&] {
            Outcome o{true, 0, std::string("[") + qn[qs] + std::to_string(a) + ", " + dn[ds] + std::to_string(b) + "]",
                      "0, " + over};
            for (auto& P : all_ops()) {
              const EndoW& q = qs == 0 ? P.q[a - 1] : P.qb[a - 1];
              const EndoW& d = ds == 0 ? P.d[b - 1] : P.db[b - 1];
              compare(o, graded_bracket(q, 1, d, 1), EndoW{});
            }
            return o;
          });
        }

  run(r, "d2.composed_vs_expanded", [&] {
    Outcome o{true, 0, "kappa eps_ab d_a d_b", "kappa (e2 + 2 eps_ab e_a i_b - 2 i2)"};
    for (auto& B : Bs) {
      compare(o, d2_composed(B, eps), d2_expanded(B, eps));
      compare(o, dbar2_composed(B, eps), dbar2_expanded(B, eps));
    }
    return o;
  });
  run(r, "d2.composed_vs_factorized", [&] {
    Outcome o{true, 0, "kappa eps_ab d_a d_b", "(e2 x Id) + (Id x i2)"};
    for (auto& B : Bs) {
      compare(o, d2_composed(B, eps), d2_two_term(B, eps));
      compare(o, dbar2_composed(B, eps), dbar2_two_term(B, eps));
    }
    return o;
  });
  run(r, "parity.odd_operators", [&] {
    Outcome o{true, 0, "d, dbar, q, qbar, e, i", "odd"};
    for (auto& B : Bs)
      for (int a = 1; a <= 2; ++a)
        for (const EndoW& x : {build_d(a, B), build_dbar(a, B), build_q(a, B), build_qbar(a, B), op_ext_plus(a),
                               op_int_minus(a, B)})
          if (!x.is_odd()) o.pass = false;
    return o;
  });

  run(r, "chiral.kernel_dim", [&] {
    Outcome o{true, 0, "dim ker {dbar_1, dbar_2}", "4, " + over};
    for (auto& B : Bs)
      if (chiral_nullspace(B).size() != 4) {
        o.pass = false;
        o.err = std::max(o.err, std::abs(double(chiral_nullspace(B).size()) - 4));
      }
    return o;
  });
  run(r, "chiral.closed_form", [&] {
    Outcome o{true, 0, "null space of {dbar_1, dbar_2}", "closed form with (phi, psi, F) read back"};
    for (auto& B : Bs) {
      for (auto& v : chiral_nullspace(B)) compare(o, chiral_element(B, chiral_params_of(v)), v);
      for (auto& k : chiral_kernel(B))
        for (int b = 1; b <= 2; ++b) compare(o, build_dbar(b, B).apply(k), Multivector{});
    }
    return o;
  });
  run(r, "chiral.printed_form", [&] {
    Outcome o{true, 0, "closed form with printed signs", "null space of {dbar_1, dbar_2}"};
    for (auto& B : Bs)
      for (auto& v : chiral_nullspace(B)) compare(o, chiral_element_as_printed(B, chiral_params_of(v)), v);
    return o;
  });
  return r;
}

// ---- superfourier -------------------------------------------------------------

namespace {

SuperFunction<CQ> random_superfunction(Rng& rng, int waves) {
  SuperFunction<CQ> f;
  for (int w = 0; w < waves; ++w) {
    MomentumQ k = rng.momentum();
    for (int m = 0; m < kDimW; ++m) f.add(k, m, rng.complex(6, 5));
  }
  return f;
}

// ⋆ on one wave compared with a momentum-side operator
void intertwine(Outcome& o, const SuperFunction<CQ>& f, const std::function<Op16<CQ>(const MomentumQ&)>& theta_op,
                const std::function<Op16<CQ>(const MomentumQ&)>& symbol) {
  const Op16<CQ> H = hodge_op<CQ>();
  for (auto& w : f.waves) compare(o, H.apply(theta_op(w.k).apply(w.v)), symbol(w.k).apply(H.apply(w.v)));
}

}  // namespace

Report suite_superfourier(std::uint64_t seed, int trials) {
  Report r;
  r.suite = "superfourier";
  r.seed = seed;
  r.tol = 0;
  Rng rng(seed);
  const CQ I = CQ::i();

  run(r, "hodge.table", [&] {
    // θ-monomial -> (τ-monomial, coefficient) read off the transform of a generic superfunction
    struct Row { int from, to; CQ k; };
    const Row rows[] = {{0, 15, CQ(1)},   {1, 13, I},        {2, 14, I},        {4, 7, I},
                        {8, 11, I},       {3, 12, CQ(1)},    {12, 3, CQ(1)},    {5, 5, CQ(-1)},
                        {6, 6, CQ(-1)},   {9, 9, CQ(-1)},    {10, 10, CQ(-1)},  {7, 4, I},
                        {11, 8, I},       {13, 1, I},        {14, 2, I},        {15, 0, CQ(1)}};
    Outcome o{true, 0, "hodge_star on 16 monomials", "coefficient table of the transformed generic superfunction"};
    for (auto& row : rows) compare(o, hodge_star(Multivector::basis(row.from)), row.k * Multivector::basis(row.to));
    return o;
  });
  run(r, "hodge.inverse", [&] {
    Outcome o{true, 0, "star^-1 star v", "v"};
    for (int t = 0; t < trials; ++t) {
      Multivector v = rng.multivector();
      compare(o, hodge_star_inverse(hodge_star(v)), v);
    }
    return o;
  });
  run(r, "exchange.four_identities", [&] {
    Outcome o{true, 0, "star(d/dtheta v), star(theta v) and barred", "i eps t star v, -i eps d/dt star v"};
    for (int t = 0; t < trials; ++t) {
      ExchangeReport e = exchange_check(rng.multivector());
      if (!e.exact_zero) o.pass = false;
      o.err = std::max(o.err, e.max_discrepancy);
    }
    return o;
  });

  std::vector<SuperFunction<CQ>> fs;
  for (int t = 0; t < trials; ++t) fs.push_back(random_superfunction(rng, 1 + t % 3));

  run(r, "intertwine.D", [&] {
    Outcome o{true, 0, "star (D_a f)^", "i eps_ab zeta_{d_b}(p) star f^"};
    for (auto& f : fs)
      for (int a = 1; a <= 2; ++a)
        intertwine(o, f, [&](const MomentumQ& k) { return op_D<CQ>(a, k); },
                   [&](const MomentumQ& k) {
                     Op16<CQ> s;
                     for (int b = 1; b <= 2; ++b) s = s + (I * eps_lower<CQ>(a, b)) * op(zeta_d(k, b));
                     return s;
                   });
    return o;
  });
  run(r, "intertwine.Dbar", [&] {
    Outcome o{true, 0, "star (Dbar_a f)^", "i eps_ab zeta_{dbar_b}(p) star f^"};
    for (auto& f : fs)
      for (int a = 1; a <= 2; ++a)
        intertwine(o, f, [&](const MomentumQ& k) { return op_Dbar<CQ>(a, k); },
                   [&](const MomentumQ& k) {
                     Op16<CQ> s;
                     for (int b = 1; b <= 2; ++b) s = s + (I * eps_lower<CQ>(a, b)) * op(zeta_dbar(k, b));
                     return s;
                   });
    return o;
  });
  run(r, "intertwine.D2", [&] {
    Outcome o{true, 0, "star (D2 f)^", "-zeta_{d2}(p) star f^"};
    for (auto& f : fs)
      intertwine(o, f, [&](const MomentumQ& k) { return op_D2<CQ>(k); },
                 [&](const MomentumQ& k) { return CQ(-1) * op(zeta_d2(k)); });
    return o;
  });
  run(r, "intertwine.Dbar2", [&] {
    Outcome o{true, 0, "star (Dbar2 f)^", "-zeta_{dbar2}(p) star f^"};
    for (auto& f : fs)
      intertwine(o, f, [&](const MomentumQ& k) { return op_Dbar2<CQ>(k); },
                 [&](const MomentumQ& k) { return CQ(-1) * op(zeta_dbar2(k)); });
    return o;
  });
  run(r, "transform.roundtrip", [&] {
    Outcome o{true, 0, "inverse_super_ft(super_ft f)", "f"};
    for (auto& f : fs) {
      auto g = inverse_super_ft(super_ft(f));
      for (std::size_t w = 0; w < f.waves.size(); ++w) compare(o, g.waves[w].v, f.waves[w].v);
    }
    return o;
  });
  run(r, "transform.berezin_body", [&] {
    Outcome o{true, 0, "berezin_integral(super_ft f)", "body_restriction(f)"};
    for (auto& f : fs) {
      auto d = (berezin_integral(super_ft(f)) - body_restriction(f)).pruned();
      if (!d.is_zero()) {
        o.pass = false;
        o.err = std::max(o.err, d.max_abs());
      }
    }
    return o;
  });
  run(r, "conjugation.involution", [&] {
    Outcome o{true, 0, "conj(conj f)", "f"};
    for (auto& f : fs) {
      auto d = conjugate_sf(conjugate_sf(f)) - f;
      if (!d.is_zero()) {
        o.pass = false;
        o.err = std::max(o.err, d.max_abs());
      }
    }
    return o;
  });
  run(r, "group_law.associative", [&] {
    const int N = 4;
    auto odd = [&] {
      AuxGrassmann x(N);
      for (std::size_t k = 0; k < x.c.size(); ++k)
        if (__builtin_popcount(k) & 1) x.c[k] = rng.complex(3, 2);
      return x;
    };
    auto even = [&] {
      AuxGrassmann x(N);
      for (std::size_t k = 0; k < x.c.size(); ++k)
        if (!(__builtin_popcount(k) & 1)) x.c[k] = rng.complex(3, 2);
      return x;
    };
    auto point = [&] {
      SuperPoint u = SuperPoint::zero(N);
      for (auto& x : u.v) x = even();
      for (auto& x : u.s) x = odd();
      for (auto& x : u.t) x = odd();
      return u;
    };
    Outcome o{true, 0, "(u*v)*w, u*0, u*u^-1", "u*(v*w), u, 0 over Lambda_4"};
    for (int t = 0; t < std::max(1, trials / 3); ++t) {
      SuperPoint u = point(), v = point(), w = point();
      if (!(group_law(group_law(u, v), w) == group_law(u, group_law(v, w)))) o.pass = false;
      if (!(group_law(u, SuperPoint::zero(N)) == u)) o.pass = false;
      if (!(group_law(u, group_inverse(u)) == SuperPoint::zero(N))) o.pass = false;
    }
    return o;
  });
  return r;
}

// ---- symbols ------------------------------------------------------------------

Report suite_symbols(std::uint64_t seed, double tol, int trials) {
  Report r;
  r.suite = "symbols";
  r.seed = seed;
  r.tol = tol;
  Rng rng(seed);
  std::vector<std::pair<double, Momentum>> orbit;
  for (int t = 0; t < trials; ++t) {
    double m = rng.uniform(0.5, 3.0);
    orbit.push_back({m, rng.on_shell_numeric(m)});
  }
  auto rest = [](double m) {
    Momentum p;
    p.p = {m, 0, 0, 0};
    return p;
  };

  run(r, "propagate.closed_form", [&] {
    Outcome o{true, 0, "rho(h_p) u rho(h_p)^-1", "closed-form zeta(p) for d2, dbar2, i2, d_a, dbar_a"};
    for (auto& [m, p] : orbit) {
      compare(o, propagate(zeta_d2(rest(m)), p, m, tol), zeta_d2(p), tol);
      compare(o, propagate(zeta_dbar2(rest(m)), p, m, tol), zeta_dbar2(p), tol);
      compare(o, propagate(zeta_i2(rest(m)), p, m, tol), zeta_i2(p), tol);
      for (int a = 1; a <= 2; ++a) {
        compare(o, propagate_d(p, m, a, tol), zeta_d(p, a), tol);
        compare(o, propagate_dbar(p, m, a, tol), zeta_dbar(p, a), tol);
      }
    }
    return o;
  });
  run(r, "propagate.rest", [&] {
    Outcome o{true, 0, "propagate(u, m e0)", "u"};
    for (auto& [m, p] : orbit) compare(o, propagate(zeta_d2(rest(m)), rest(m), m, tol), zeta_d2(rest(m)), tol);
    return o;
  });
  run(r, "equivariance", [&] {
    Outcome o{true, 0, "zeta(h p)", "rho(h) zeta(p) rho(h)^-1 for d2, dbar2, i2"};
    for (auto& [m, p] : orbit) {
      Mat2d h = rng.spin_element();
      Momentum hp = act_on_momentum(h, p);
      EndoWd R = spin_action_matrix(h), Ri = R.inverse();
      compare(o, zeta_d2(hp), R * zeta_d2(p) * Ri, tol);
      compare(o, zeta_dbar2(hp), R * zeta_dbar2(p) * Ri, tol);
      compare(o, zeta_i2(hp), R * zeta_i2(p) * Ri, tol);
    }
    return o;
  });
  run(r, "dirac.kernel_dim", [&] {
    Outcome o{true, 0, "dim ker (gamma(p)/m - Id)", "2 on the orbit, 0 off it, 50 momenta"};
    for (int t = 0; t < 50; ++t) {
      double m = rng.uniform(0.5, 3.0);
      Momentum p = rng.on_shell_numeric(m);
      const bool on = t % 2 == 0;
      if (!on)
        for (auto& x : p.p) x *= rng.uniform(1.2, 2.0);
      int k = numeric_kernel_dim(dirac_symbol(p, m), tol * 1e3);
      if (k != (on ? 2 : 0)) {
        o.pass = false;
        o.err = std::max(o.err, double(std::abs(k - (on ? 2 : 0))));
      }
    }
    return o;
  });
  run(r, "dirac.propagate", [&] {
    Outcome o{true, 0, "propagate(gamma0 - Id, p)", "gamma(p)/m - Id"};
    for (auto& [m, p] : orbit) compare(o, propagate_dirac(dirac_symbol(rest(m), m), p, m, tol), dirac_symbol(p, m), tol);
    return o;
  });
  run(r, "divergence.kernel_dim", [&] {
    Outcome o{true, 0, "dim ker delta_{alpha,beta}(p)", "2 sigma + 1, sigma = alpha + beta, 2alpha,2beta <= 4"};
    for (int ta = 1; ta <= 4; ++ta)
      for (int tb = 1; tb <= 4; ++tb)
        for (int t = 0; t < 2; ++t) {
          double m = rng.uniform(0.5, 2.0);
          Momentum p = t == 0 ? rest(m) : rng.on_shell_numeric(m, 1.0);
          int k = numeric_kernel_dim(divergence_symbol(ta, tb, p), 1e-8);
          if (k != ta + tb + 1) {
            o.pass = false;
            o.err = std::max(o.err, double(std::abs(k - ta - tb - 1)));
          }
        }
    return o;
  });
  run(r, "chiral.orbit_kernel", [&] {
    Outcome o{true, 0, "null space of {zeta_dbar_1(p), zeta_dbar_2(p)}", "closed form at B = B(p)"};
    for (int t = 0; t < 10; ++t) {
      MomentumQ p = rng.on_shell(Q(rng.integer(1, 4), rng.integer(1, 3)));
      PairingMatrix B = gamma_pair(p);
      auto ns = chiral_nullspace(B);
      if (ns.size() != 4) o.pass = false;
      for (auto& v : ns) compare(o, chiral_element(B, chiral_params_of(v)), v);
    }
    return o;
  });
  run(r, "superspin0.mass_shell_factor", [&] {
    Outcome o{true, 0, "eliminant on phi", "m^2 - |p|^2"};
    for (int t = 0; t < 3; ++t) {
      Q m(rng.integer(1, 5), rng.integer(1, 3));
      m.canonicalize();
      auto rep = superspin0_constraints(rng.on_shell(m), m);
      if (!rep.phi_factor_is_mass_shell) o.pass = false;
      o.lhs = rep.phi_factor.str();
    }
    return o;
  });
  run(r, "superspin0.rest_relations", [&] {
    Outcome o{true, 0, "", "psib1 = psi2, psib2 = -psi1"};
    MomentumQ p;
    p.p[0] = 1;
    auto rep = superspin0_constraints(p, Q(1));
    if (!rep.psibar_of_psi) {
      o.pass = false;
      return o;
    }
    auto& R = *rep.psibar_of_psi;
    std::ostringstream s;
    s << "psib1 = " << R[0][0].str() << " psi1 + " << R[0][1].str() << " psi2, psib2 = " << R[1][0].str() << " psi1 + "
      << R[1][1].str() << " psi2";
    o.lhs = s.str();
    o.pass = R[0][0].is_zero() && R[0][1] == CQ(1) && R[1][0] == CQ(-1) && R[1][1].is_zero();
    return o;
  });
  return r;
}

// ---- brackets -----------------------------------------------------------------

Report suite_brackets(std::uint64_t seed, int momenta) {
  Report r;
  r.suite = "brackets";
  r.seed = seed;
  r.tol = 0;
  Rng rng(seed);
  std::vector<MomentumQ> ks;
  for (int t = 0; t < momenta; ++t) ks.push_back(rng.momentum());

  // Γ^μ_{ab} P_μ assembled from the unit covectors
  auto gammaP = [](int a, int b, const MomentumQ& k) {
    Op16<CQ> s;
    for (int mu = 0; mu < 4; ++mu) {
      MomentumQ e;
      e.p[mu] = 1;
      s = s + gamma_low<CQ>(e)[a - 1][b - 1] * op_P<CQ>(mu, k);
    }
    return s;
  };
  auto bracket = [](const Op16<CQ>& x, const Op16<CQ>& y) { return x * y + y * x; };
  const std::string over = std::to_string(momenta) + " random rational momenta";

  run(r, "bracket.[P,P]", [&] {
    Outcome o{true, 0, "[P_mu, P_nu]", "0, " + over};
    for (auto& k : ks)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) compare(o, op_P<CQ>(m, k) * op_P<CQ>(n, k) - op_P<CQ>(n, k) * op_P<CQ>(m, k), Op16<CQ>{});
    return o;
  });
  run(r, "bracket.[P,Q]", [&] {
    Outcome o{true, 0, "[P_mu, Q_a], [P_mu, Qbar_a]", "0, " + over};
    for (auto& k : ks)
      for (int m = 0; m < 4; ++m)
        for (int a = 1; a <= 2; ++a) {
          compare(o, op_P<CQ>(m, k) * op_Q<CQ>(a, k) - op_Q<CQ>(a, k) * op_P<CQ>(m, k), Op16<CQ>{});
          compare(o, op_P<CQ>(m, k) * op_Qbar<CQ>(a, k) - op_Qbar<CQ>(a, k) * op_P<CQ>(m, k), Op16<CQ>{});
        }
    return o;
  });
  run(r, "bracket.[Q,Q]", [&] {
    Outcome o{true, 0, "[Q_a, Q_b], [Qbar_a, Qbar_b]", "0, " + over};
    for (auto& k : ks)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          compare(o, bracket(op_Q<CQ>(a, k), op_Q<CQ>(b, k)), Op16<CQ>{});
          compare(o, bracket(op_Qbar<CQ>(a, k), op_Qbar<CQ>(b, k)), Op16<CQ>{});
        }
    return o;
  });
  run(r, "bracket.[Q,Qbar]", [&] {
    Outcome o{true, 0, "[Q_a, Qbar_b]", "-2 Gamma^mu_ab P_mu, " + over};
    for (auto& k : ks)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) compare(o, bracket(op_Q<CQ>(a, k), op_Qbar<CQ>(b, k)), CQ(-2) * gammaP(a, b, k));
    return o;
  });
  run(r, "bracket.[D,Dbar]", [&] {
    Outcome o{true, 0, "[D_a, Dbar_b]", "2 Gamma^mu_ab P_mu, " + over};
    for (auto& k : ks)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) compare(o, bracket(op_D<CQ>(a, k), op_Dbar<CQ>(b, k)), CQ(2) * gammaP(a, b, k));
    return o;
  });
  run(r, "bracket.[D,D]", [&] {
    Outcome o{true, 0, "[D_a, D_b], [Dbar_a, Dbar_b]", "0, " + over};
    for (auto& k : ks)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          compare(o, bracket(op_D<CQ>(a, k), op_D<CQ>(b, k)), Op16<CQ>{});
          compare(o, bracket(op_Dbar<CQ>(a, k), op_Dbar<CQ>(b, k)), Op16<CQ>{});
        }
    return o;
  });
  run(r, "bracket.mixed_Q_D", [&] {
    Outcome o{true, 0, "[Q_a,D_b], [Qbar_a,Dbar_b], [Qbar_a,D_b], [Q_a,Dbar_b]", "0, " + over};
    for (auto& k : ks)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
          compare(o, bracket(op_Q<CQ>(a, k), op_D<CQ>(b, k)), Op16<CQ>{});
          compare(o, bracket(op_Qbar<CQ>(a, k), op_Dbar<CQ>(b, k)), Op16<CQ>{});
          compare(o, bracket(op_Qbar<CQ>(a, k), op_D<CQ>(b, k)), Op16<CQ>{});
          compare(o, bracket(op_Q<CQ>(a, k), op_Dbar<CQ>(b, k)), Op16<CQ>{});
        }
    return o;
  });
  return r;
}

// ---- dispatch -----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"all", "algebra", "superfourier", "symbols", "brackets"};
  return n;
}

Report run_suite(const std::string& name, std::uint64_t seed, double tol) {
  if (name == "algebra") return suite_algebra(seed);
  if (name == "superfourier") return suite_superfourier(seed);
  if (name == "symbols") return suite_symbols(seed, tol);
  if (name == "brackets") return suite_brackets(seed);
  if (name == "all") {
    Report r;
    r.suite = "all";
    r.seed = seed;
    r.tol = tol;
    for (auto* n : {"algebra", "superfourier", "symbols", "brackets"}) {
      Report s = run_suite(n, seed, tol);
      for (auto& c : s.checks) {
        Check k = c;
        k.id = std::string(n) + "/" + c.id;
        r.checks.push_back(k);
      }
    }
    std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return r;
  }
  throw UnknownSuite("unknown suite '" + name + "'");
}

// ---- pipeline -----------------------------------------------------------------

namespace {

double grid_error(const ChiralData<cd>& c, double m, double h) {
  Grid4 g;
  g.n = 5;
  g.h = h;
  GridResidual res = grid_residual(sample(c, g), m);
  return std::max({res.max_kg, res.max_dirac, res.max_f});
}

}  // namespace

Report run_pipeline(double mass, const Momentum& p, std::uint64_t seed, double tol) {
  if (!(mass > 0)) throw std::invalid_argument("mass must be positive");
  if (std::fabs(minkowski_norm2(p) - mass * mass) > tol * std::max(1.0, mass * mass))
    throw OffOrbit("momentum is not on the mass shell");
  if (p.p[0] <= 0) throw NonPositiveEnergy("p0 must be positive");

  Report r;
  r.suite = "pipeline";
  r.seed = seed;
  r.tol = tol;
  Rng rng(seed);
  const double m = mass;
  Momentum rest;
  rest.p = {m, 0, 0, 0};

  run(r, "orbit.classify", [&] {
    OrbitClass c = classify_orbit(p, tol * m * m);
    return Outcome{c == OrbitClass::MassivePlus, 0, to_string(c), to_string(OrbitClass::MassivePlus)};
  });
  run(r, "symbols.d2_propagation", [&] {
    Outcome o{true, 0, "rho(h_p) d2 rho(h_p)^-1", "zeta_d2(p)"};
    compare(o, propagate(zeta_d2(rest), p, m, tol), zeta_d2(p), tol);
    return o;
  });
  run(r, "symbols.dirac_kernel", [&] {
    int k = numeric_kernel_dim(dirac_symbol(p, m), std::sqrt(tol));
    return Outcome{k == 2, double(std::abs(k - 2)), "dim ker " + std::to_string(k), "2"};
  });

  const cd a(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const std::array<cd, 2> u{cd(rng.uniform(-1, 1), rng.uniform(-1, 1)), cd(rng.uniform(-1, 1), rng.uniform(-1, 1))};
  const ChiralData<cd> sol = solution_generator<cd>(p, cd(m), a, u, tol);
  const SuperFunction<cd> f = chiral_expand(sol);
  const double scale = std::max(1.0, f.max_abs());

  run(r, "components.residual", [&] {
    auto res = component_residual(sol, cd(m));
    double e = res.max_abs() / scale;
    return Outcome{e <= tol, e, "(box+m2) phi, Dirac, F relation", "0"};
  });
  run(r, "components.chiral", [&] {
    double e = std::max(apply_Dbar(1, f).max_abs(), apply_Dbar(2, f).max_abs()) / scale;
    return Outcome{e <= tol, e, "Dbar_a f", "0"};
  });
  run(r, "components.wz_operator", [&] {
    double e = wz_operator(f, cd(m), tol * scale).max_abs() / scale;
    return Outcome{e <= tol, e, "-Dbar2 conj(f) + m f", "0"};
  });
  run(r, "superfourier.intertwine", [&] {
    Outcome o{true, 0, "star (Dbar_a f)^, star (D2 f)^", "i eps zeta_dbar star f^, -zeta_d2 star f^"};
    const Op16<cd> H = hodge_op<cd>();
    for (auto& w : f.waves) {
      Eigen::VectorXcd sv(kDimW);
      auto hv = H.apply(w.v);
      for (int i = 0; i < kDimW; ++i) sv(i) = hv[i];
      auto to_vec = [](const Vec16<cd>& x) {
        Eigen::VectorXcd v(kDimW);
        for (int i = 0; i < kDimW; ++i) v(i) = x[i];
        return v;
      };
      for (int b = 1; b <= 2; ++b) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(kDimW);
        for (int c = 1; c <= 2; ++c) rhs += cd(0, 1) * eps_lower<cd>(b, c) * (zeta_dbar(w.k, c) * sv);
        compare(o, to_vec(H.apply(op_Dbar<cd>(b, w.k).apply(w.v))), rhs, tol);
      }
      compare(o, to_vec(H.apply(op_D2<cd>(w.k).apply(w.v))), -(zeta_d2(w.k) * sv), tol);
    }
    return o;
  });
  run(r, "grid.convergence", [&] {
    const double h = 0.1 / std::max(1.0, std::fabs(p.p[0]));
    double e1 = grid_error(sol, m, h), e2 = grid_error(sol, m, h / 2);
    double order = std::log2(e1 / e2);
    std::ostringstream s;
    s << "residual " << e1 << " -> " << e2 << ", order " << order;
    return Outcome{std::fabs(order - 2.0) <= 0.2, std::fabs(order - 2.0), s.str(), "order 2.0 +- 0.2"};
  });
  return r;
}

}  // namespace superkit
