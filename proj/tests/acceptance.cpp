// Acceptance run: one pass/fail line per criterion, followed by its sub-checks.
//
//   superkit_acceptance [--seed N] [--expect-fail 1,2]
//
// Exit status is 0 when every criterion passes, or, with --expect-fail, when
// exactly the listed criteria fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "superkit/components.hpp"
#include "superkit/repdecomp.hpp"
#include "superkit/suites.hpp"
#include "superkit/symbols.hpp"

using namespace superkit;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

struct Criterion {
  int id = 0;
  std::string title;
  double limit_ms = 0;
  std::string tolerance;
  bool checks_pass = true;
  double ms = 0;
  std::vector<std::string> lines;

  bool pass() const { return checks_pass && ms < limit_ms; }
  void sub(bool ok, const std::string& text) {
    lines.push_back(std::string(ok ? "pass" : "FAIL") + "  " + text);
    if (!ok) checks_pass = false;
  }
  // Sub-line that is reported but does not decide the criterion.
  void note(const std::string& text) { lines.push_back("note  " + text); }
};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

std::string fmt(double x, int prec = 3) {
  std::ostringstream s;
  s.precision(prec);
  s << x;
  return s.str();
}

// Folds the checks of a suite report into one sub-line.  A pattern ending in '*'
// matches by prefix, otherwise exactly.
void fold(Criterion& c, const Report& r, const std::vector<std::string>& prefixes, const std::string& label) {
  int n = 0, ok = 0;
  double err = 0, ms = 0;
  std::vector<std::string> failed;
  for (auto& ch : r.checks) {
    bool match = false;
    for (auto& p : prefixes)
      match = match || (p.back() == '*' ? starts_with(ch.id, p.substr(0, p.size() - 1)) : ch.id == p);
    if (!match) continue;
    ++n;
    ok += ch.pass;
    err = std::max(err, ch.max_error);
    ms += ch.runtime_ms;
    if (!ch.pass) failed.push_back(ch.id + " (" + ch.lhs + " vs " + ch.rhs + ")");
  }
  c.ms += ms;
  std::string text = label + ": " + std::to_string(ok) + "/" + std::to_string(n) + " checks, max_error " + fmt(err) +
                     ", " + fmt(ms, 4) + " ms";
  for (auto& f : failed) text += "\n        failed " + f;
  c.sub(n > 0 && ok == n, text);
}

// ---- exact rank over Q ---------------------------------------------------------------

int rank_q(std::vector<std::vector<Q>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Real coordinates of chiral data on the wave pair ±p: (φ, ψ1, ψ2, F) × (+p, -p) × (re, im).
ChiralData<CQ> basis_datum(const MomentumQ& p, int j) {
  ChiralData<CQ> c;
  const int field = j / 4, sector = (j / 2) % 2, imag = j % 2;
  const MomentumQ k = sector ? -p : p;
  const CQ a = imag ? CQ::i() : CQ(1);
  if (field == 0) c.phi.add(k, a);
  if (field == 1) c.psi[0].add(k, a);
  if (field == 2) c.psi[1].add(k, a);
  if (field == 3) c.F.add(k, a);
  return c;
}

void push_wave(std::vector<Q>& col, const PlaneWaveFn<CQ>& f, const MomentumQ& p) {
  for (const MomentumQ& k : {p, -p}) {
    CQ v;
    for (auto& t : f.terms)
      if (t.first == k) v += t.second;
    col.push_back(v.re);
    col.push_back(v.im);
  }
}

// Columns of the real-linear maps c -> wz_operator(chiral_expand(c)) and c -> component residuals.
struct Maps {
  std::vector<std::vector<Q>> wz, comp;
};

Maps linear_maps(const MomentumQ& p, const Q& m) {
  Maps out;
  std::vector<std::vector<Q>> wz_cols, comp_cols;
  for (int j = 0; j < 16; ++j) {
    ChiralData<CQ> c = basis_datum(p, j);
    SuperFunction<CQ> w = wz_operator(chiral_expand(c), CQ(m));
    std::vector<Q> wc;
    for (int mask = 0; mask < kDimW; ++mask) push_wave(wc, w.component(mask), p);
    ComponentResidual<CQ> r = component_residual(c, CQ(m));
    std::vector<Q> cc;
    push_wave(cc, r.kg, p);
    push_wave(cc, r.dirac[0], p);
    push_wave(cc, r.dirac[1], p);
    push_wave(cc, r.f_relation, p);
    wz_cols.push_back(wc);
    comp_cols.push_back(cc);
  }
  auto transpose = [](const std::vector<std::vector<Q>>& cols) {
    std::vector<std::vector<Q>> rows(cols[0].size(), std::vector<Q>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < cols[c].size(); ++r) rows[r][c] = cols[c][r];
    return rows;
  };
  out.wz = transpose(wz_cols);
  out.comp = transpose(comp_cols);
  return out;
}

// ---- criteria ---------------------------------------------------------------------------

Criterion c1(const Report& alg) {
  Criterion c{1, "algebraic identity suite", 1000, "exact"};
  fold(c, alg, {"anticomm.i_t*"}, "{i, e} = B(a,b) Id, 8 pairs");
  fold(c, alg, {"anticomm.d.*", "anticomm.q.*"}, "{d_a, dbar_b} = 2B(a,b) Id, {q_a, qbar_b} = -2B(a,b) Id, 8 pairs");
  fold(c, alg, {"anticomm.nilpotent"}, "{e,e} = {i,i} = {d,d} = {dbar,dbar} = 0");
  fold(c, alg, {"susy.*"}, "[q, d] = 0 for all 16 pairs");
  fold(c, alg, {"d2.composed_vs_expanded"}, "d2, dbar2: composition = graded expansion kappa(e2 + 2 eps e i - 2 i2)");
  fold(c, alg, {"d2.composed_vs_factorized"}, "d2, dbar2: composition = two-term form (e2 x Id) + (Id x i2)");
  c.note("the cross terms 2 eps_ab e_a i_b survive under graded signs, so the two-term form cannot match");
  return c;
}

Criterion c2(const Report& alg) {
  Criterion c{2, "chiral kernel", 1000, "exact"};
  fold(c, alg, {"chiral.kernel_dim"}, "dim ker {dbar_1, dbar_2} = 4, B = Id and 20 random B");
  fold(c, alg, {"chiral.closed_form"}, "null space = closed form (ledger signs), coefficient by coefficient");
  fold(c, alg, {"chiral.printed_form"}, "null space = closed form with the printed signs");
  return c;
}

Criterion c3(const Report& sf) {
  Criterion c{3, "Hodge star and super Fourier transform", 2000, "exact"};
  fold(c, sf, {"hodge.table"}, "hodge_star on all 16 monomials");
  fold(c, sf, {"exchange.four_identities"}, "four exchange identities, 30 random elements");
  fold(c, sf, {"intertwine.Dbar", "intertwine.D2"}, "star(Dbar f)^ = i eps zeta_dbar, star(D2 f)^ = -zeta_d2, 30 trials");
  fold(c, sf, {"intertwine.D", "intertwine.Dbar2"}, "companion identities for D and Dbar2");
  return c;
}

Criterion c4(const Report& br) {
  Criterion c{4, "graded bracket table", 2000, "exact"};
  fold(c, br, {"bracket.[Q,Qbar]"}, "[Q, Qbar] = -2 Gamma P, 10 random momenta");
  fold(c, br, {"bracket.[D,Dbar]"}, "[D, Dbar] = 2 Gamma P");
  fold(c, br, {"bracket.mixed_Q_D"}, "mixed Q/D brackets vanish");
  fold(c, br, {"bracket.[P*", "bracket.[Q,Q]", "bracket.[D,D]"}, "remaining brackets vanish");
  return c;
}

Criterion c5(const Report& sy) {
  Criterion c{5, "symbols", 5000, "1e-9"};
  fold(c, sy, {"propagate.*"}, "propagation = closed form at 30 on-shell momenta");
  fold(c, sy, {"equivariance"}, "zeta(hp) = rho(h) zeta(p) rho(h)^-1");
  fold(c, sy, {"dirac.*"}, "Dirac kernel dim 2 on shell, 0 off shell, 50 momenta");
  return c;
}

Criterion c6() {
  Criterion c{6, "superspin-0 constraints", 1000, "exact"};
  auto t0 = Clock::now();
  Rng rng(6);
  int ok = 0, n = 0;
  std::string factor;
  for (int t = 0; t < 10; ++t) {
    Q m(rng.integer(1, 5), rng.integer(1, 3));
    m.canonicalize();
    MomentumQ p = t % 2 ? rng.on_shell(m) : rng.momentum();
    auto rep = superspin0_constraints(p, m);
    ++n;
    ok += rep.phi_factor_is_mass_shell;
    if (t == 0) factor = rep.phi_factor.str() + " with |p|^2 = " + rep.norm2.get_str();
  }
  c.sub(ok == n, "eliminant on phi = m^2 - |p|^2 at " + std::to_string(n) + " momenta (" + std::to_string(ok) +
                     " exact), e.g. " + factor);
  MomentumQ rest{{Q(1), Q(0), Q(0), Q(0)}};
  auto r = superspin0_constraints(rest, Q(1));
  bool rel = false;
  if (r.psibar_of_psi) {
    auto R = *r.psibar_of_psi;
    rel = R[0][0].is_zero() && R[0][1] == CQ(1) && R[1][0] == CQ(-1) && R[1][1].is_zero();
  }
  c.sub(rel, "rest frame: psib1 = psi2, psib2 = -psi1");
  c.ms = ms_since(t0);
  return c;
}

Criterion c7() {
  Criterion c{7, "component reduction", 10000, "exact; grid order 2.0 +- 0.2"};
  auto t0 = Clock::now();
  Rng rng(7);

  // kernels of the two real-linear maps agree: rank A = rank C = rank [A; C]
  struct Case {
    MomentumQ p;
    Q m;
  };
  std::vector<Case> cases{{MomentumQ{{Q(1), Q(0), Q(0), Q(0)}}, Q(1)},
                          {MomentumQ{{Q(5, 4), Q(3, 4), Q(0), Q(0)}}, Q(1)},
                          {MomentumQ{{Q(2), Q(0), Q(0), Q(0)}}, Q(1)}};
  for (int t = 0; t < 3; ++t) {
    Q m(rng.integer(1, 4), rng.integer(1, 3));
    m.canonicalize();
    cases.push_back({rng.on_shell(m), m});
  }
  int agree = 0;
  std::string dims;
  for (auto& k : cases) {
    Maps mp = linear_maps(k.p, k.m);
    auto both = mp.wz;
    both.insert(both.end(), mp.comp.begin(), mp.comp.end());
    int ra = rank_q(mp.wz), rc = rank_q(mp.comp), rb = rank_q(both);
    agree += ra == rc && rc == rb;
    dims += (dims.empty() ? "" : ", ") + std::to_string(16 - ra);
  }
  c.sub(agree == static_cast<int>(cases.size()),
        "ker wz_operator = ker {KG, Dirac, F relation} on +-p wave pairs, " + std::to_string(cases.size()) +
            " momenta (real kernel dims " + dims + ")");

  int zero = 0;
  const int trials = 10;
  for (int t = 0; t < trials; ++t) {
    Q m(rng.integer(1, 4), rng.integer(1, 3));
    m.canonicalize();
    MomentumQ p = rng.on_shell(m);
    auto d = solution_generator<CQ>(p, CQ(m), rng.complex(), {rng.complex(), rng.complex()});
    zero += component_residual(d, CQ(m)).is_zero() && wz_operator(chiral_expand(d), CQ(m)).is_zero();
  }
  c.sub(zero == trials, "solution_generator: exact zero plane-wave residuals, " + std::to_string(zero) + "/" +
                            std::to_string(trials) + " random rational on-shell momenta");

  double worst = 0;
  std::string orders;
  for (Momentum p : {Momentum{{1, 0, 0, 0}}, Momentum{{std::cosh(1.0), std::sinh(1.0), 0, 0}},
                     Momentum{{1.25, 0.75, 0, 0}}}) {
    auto d = solution_generator<cd>(p, cd(1), cd(1, 0.5), {cd(1), cd(0.5, -1)});
    Grid4 g;
    g.n = 5;
    g.h = 0.05;
    GridResidual a = grid_residual(sample(d, g), 1.0);
    g.h = 0.025;
    GridResidual b = grid_residual(sample(d, g), 1.0);
    for (double o : {std::log2(a.max_kg / b.max_kg), std::log2(a.max_dirac / b.max_dirac)}) {
      worst = std::max(worst, std::fabs(o - 2));
      orders += (orders.empty() ? "" : ", ") + fmt(o, 5);
    }
  }
  c.sub(worst <= 0.2, "grid residual order under h -> h/2: " + orders);
  c.ms = ms_since(t0);
  return c;
}

Criterion c8() {
  Criterion c{8, "decomposition combinatorics", 1000, "exact"};
  auto t0 = Clock::now();
  int audits = 0, bad = 0;
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      auto d = tensor_sym_decompose(a, b);
      ++audits;
      if (spin_dim(d) != (a + 1) * (b + 1) ||
          weight_decompose(tensor_weights(weights_of_sym(a), weights_of_sym(b))) != d)
        ++bad;
    }
  c.sub(bad == 0, "dimension audit and weight stripping for 2a, 2b <= 20: " + std::to_string(audits - bad) + "/" +
                      std::to_string(audits));
  auto m0 = superspin_multiplet(0);
  c.sub(m0 == SpinDecomposition{{0, 2}, {1, 1}}, "superspin 0 multiplet " + to_string(m0));
  bool others = superspin_multiplet(2) == SpinDecomposition{{2, 2}, {1, 1}, {3, 1}} &&
                superspin_multiplet(1) == SpinDecomposition{{1, 2}, {0, 1}, {2, 1}};
  c.sub(others, "superspin 1/2 and 1 multiplets");
  int dof_ok = 0;
  for (int s = 0; s <= 20; ++s) {
    auto d = dof_check(s);
    dof_ok += d.bosonic == d.fermionic && d.bosonic == 2 * s + 2;
  }
  c.sub(dof_ok == 21, "bosonic = fermionic = 4 sigma + 2 for 2 sigma <= 20: " + std::to_string(dof_ok) + "/21");
  c.ms = ms_since(t0);
  return c;
}

Criterion c9() {
  Criterion c{9, "representability over Lambda_N", 10000, "exact"};
  MomentumQ p{{Q(5, 4), Q(3, 4), Q(0), Q(0)}};
  for (int N : {0, 2, 4}) {
    auto t0 = Clock::now();
    auto r = wz_equivalence_check(N, p, Q(1));
    double ms = ms_since(t0);
    c.ms += ms;
    c.sub(r.passed(), "N = " + std::to_string(N) + ": solution dim " + std::to_string(r.solution_dim) + " of " +
                          std::to_string(r.unknowns) + ", predicted " + std::to_string(r.predicted_dim) + ", " +
                          fmt(ms, 4) + " ms");
  }
  return c;
}

std::set<int> parse_list(const char* s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
      seed = std::stoull(argv[++i]);
    else if (!std::strcmp(argv[i], "--expect-fail") && i + 1 < argc)
      expected = parse_list(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--seed N] [--expect-fail i,j]\n", argv[0]);
      return 2;
    }
  }

  const Report alg = suite_algebra(seed);
  const Report sf = suite_superfourier(seed);
  const Report sy = suite_symbols(seed);
  const Report br = suite_brackets(seed);

  std::vector<std::function<Criterion()>> runs{[&] { return c1(alg); }, [&] { return c2(alg); },
                                               [&] { return c3(sf); },  [&] { return c4(br); },
                                               [&] { return c5(sy); },  c6,
                                               c7,                      c8,
                                               c9};
  std::set<int> failed;
  for (auto& run : runs) {
    Criterion c = run();
    std::printf("criterion %d: %s  %s  [%.1f ms, limit %.0f ms, tolerance %s]\n", c.id, c.pass() ? "PASS" : "FAIL",
                c.title.c_str(), c.ms, c.limit_ms, c.tolerance.c_str());
    for (auto& l : c.lines) std::printf("    %s\n", l.c_str());
    if (!c.pass()) failed.insert(c.id);
  }
  std::printf("seed %llu, %zu of 9 criteria pass\n", static_cast<unsigned long long>(seed), 9 - failed.size());
  if (argc > 1 && !expected.empty()) {
    bool match = failed == expected;
    std::printf("expected failures {");
    for (int e : expected) std::printf(" %d", e);
    std::printf(" }: %s\n", match ? "matched" : "MISMATCH");
    return match ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
