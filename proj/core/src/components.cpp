#include "superkit/components.hpp"

#include <cmath>

namespace superkit {

namespace {

template <class S>
std::array<S, 2> solve_dirac_partner(const M2<S>& G, const S& m, const std::array<S, 2>& u) {
  // r = m G^{-1} u, then conj(w)^b = r^b with conj(w)^1 = -conj(w_2), conj(w)^2 = conj(w_1)
  S det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
  std::array<S, 2> r{m * (G[1][1] * u[0] - G[0][1] * u[1]) / det, m * (G[0][0] * u[1] - G[1][0] * u[0]) / det};
  const S e = Sc<S>::from_int(ledger::kEpsUpper12);
  return {Sc<S>::conj(r[1]) / e, Sc<S>::from_int(-1) * Sc<S>::conj(r[0]) / e};
}

template <class S>
ChiralData<S> build_solution(const typename Sc<S>::Mom& p, const S& m, const S& a, const std::array<S, 2>& u) {
  ChiralData<S> c;
  c.phi.add(p, a);
  c.phi.add(-p, Sc<S>::conj(a));
  auto w = solve_dirac_partner(gamma_low<S>(p), m, u);
  for (int k = 0; k < 2; ++k) {
    c.psi[k].add(p, u[k]);
    c.psi[k].add(-p, w[k]);
  }
  c.F = (Sc<S>::from_int(ledger::kFPhiFactor) * m) * c.phi.conj();
  c.phi = c.phi.pruned();
  c.psi[0] = c.psi[0].pruned();
  c.psi[1] = c.psi[1].pruned();
  c.F = c.F.pruned();
  return c;
}

}  // namespace

template <>
ChiralData<CQ> solution_generator<CQ>(const MomentumQ& p, const CQ& m, const CQ& a, const std::array<CQ, 2>& u,
                                      double) {
  if (sgn(m.im) != 0 || sgn(m.re) <= 0)
    throw std::invalid_argument("mass must be a positive rational");
  Q mr = m.re;
  mr.canonicalize();
  if (minkowski_norm2(p) != mr * mr) throw OffOrbit("momentum not on the mass shell");
  if (sgn(p.p[0]) <= 0) throw NonPositiveEnergy("p0 must be positive");
  return build_solution<CQ>(p, m, a, u);
}

template <>
ChiralData<cd> solution_generator<cd>(const Momentum& p, const cd& m, const cd& a, const std::array<cd, 2>& u,
                                      double tol) {
  if (m.imag() != 0 || !(m.real() > 0)) throw std::invalid_argument("mass must be positive");
  const double m2 = m.real() * m.real();
  if (std::fabs(minkowski_norm2(p) - m2) > tol * m2) throw OffOrbit("momentum not on the mass shell");
  if (p.p[0] <= 0) throw NonPositiveEnergy("p0 must be positive");
  return build_solution<cd>(p, m, a, u);
}

// ---- grid residual -------------------------------------------------------------

GridResidual grid_residual(const GridChiral& c, double m) {
  const Grid4& g = c.grid;
  if (g.n < 5) throw GridTooSmall("grid needs at least 5 points per axis");
  if (c.phi.size() != g.size()) throw std::invalid_argument("grid samples do not match the grid");
  std::array<M2<cd>, 4> Gam;
  for (int mu = 0; mu < 4; ++mu) {
    Momentum e;
    e.p[mu] = 1;
    Gam[mu] = gamma_low<cd>(e);
  }
  const double eps = ledger::kEpsUpper12;
  auto at = [&](const std::vector<cd>& v, std::array<int, 4> i) {
    for (auto& x : i) x = ((x % g.n) + g.n) % g.n;
    return v[g.index(i)];
  };
  GridResidual r;
  const int lo = g.periodic ? 0 : 1, hi = g.periodic ? g.n : g.n - 1;
  std::array<int, 4> i{};
  for (i[0] = lo; i[0] < hi; ++i[0])
    for (i[1] = lo; i[1] < hi; ++i[1])
      for (i[2] = lo; i[2] < hi; ++i[2])
        for (i[3] = lo; i[3] < hi; ++i[3]) {
          cd box = 0;
          std::array<std::array<cd, 2>, 4> dup{};  // ∂_μ conj(ψ)^b
          for (int mu = 0; mu < 4; ++mu) {
            auto ip = i, im = i;
            ++ip[mu];
            --im[mu];
            cd second = (at(c.phi, ip) - 2.0 * at(c.phi, i) + at(c.phi, im)) / (g.h * g.h);
            box += mu == 0 ? second : -second;
            cd d1 = (at(c.psi1, ip) - at(c.psi1, im)) / (2 * g.h);
            cd d2 = (at(c.psi2, ip) - at(c.psi2, im)) / (2 * g.h);
            dup[mu] = {-eps * std::conj(d2), eps * std::conj(d1)};
          }
          const std::size_t k = g.index(i);
          r.max_kg = std::max(r.max_kg, std::abs(box + m * m * c.phi[k]));
          const cd psi[2] = {c.psi1[k], c.psi2[k]};
          for (int a = 0; a < 2; ++a) {
            cd d = m * psi[a];
            for (int mu = 0; mu < 4; ++mu)
              for (int b = 0; b < 2; ++b) d += cd(0, 1) * Gam[mu][a][b] * dup[mu][b];
            r.max_dirac = std::max(r.max_dirac, std::abs(d));
          }
          r.max_f = std::max(r.max_f, std::abs(c.F[k] - double(ledger::kFPhiFactor) * m * std::conj(c.phi[k])));
        }
  return r;
}

// ---- representability ------------------------------------------------------------

namespace {

// Exterior algebra on N auxiliary generators followed by θ1, θ2, θb1, θb2.
struct Combined {
  int N, G;
  std::size_t dim;
  std::vector<int> csign;

  explicit Combined(int n) : N(n), G(n + 4), dim(std::size_t(1) << (n + 4)), csign(dim) {
    for (std::size_t mask = 0; mask < dim; ++mask) {
      // c(g1 ... gk) = c(gk) ... c(g1): left-multiply the images in increasing order
      std::vector<CQ> v(dim);
      v[0] = CQ(1);
      for (int g = 0; g < G; ++g)
        if (mask & (std::size_t(1) << g)) v = mul(conj_gen(g), v);
      csign[mask] = v[swap(mask)] == CQ(1) ? 1 : -1;
    }
  }
  int th(int a) const { return N + a - 1; }
  int tb(int a) const { return N + a + 1; }
  int conj_gen(int g) const { return g < N ? g : (g < N + 2 ? g + 2 : g - 2); }
  std::size_t swap(std::size_t mask) const {
    std::size_t lowmask = (std::size_t(1) << N) - 1;
    std::size_t t = (mask >> N) & 3, b = (mask >> (N + 2)) & 3;
    return (mask & lowmask) | (b << N) | (t << (N + 2));
  }
  static int sign_before(std::size_t mask, int g) {
    return __builtin_popcountll(mask & ((std::size_t(1) << g) - 1)) & 1 ? -1 : 1;
  }
  std::vector<CQ> mul(int g, const std::vector<CQ>& v) const {
    std::vector<CQ> r(dim);
    const std::size_t bit = std::size_t(1) << g;
    for (std::size_t m = 0; m < dim; ++m)
      if (!(m & bit) && !v[m].is_zero()) r[m | bit] = sign_before(m, g) > 0 ? v[m] : -v[m];
    return r;
  }
  std::vector<CQ> der(int g, const std::vector<CQ>& v) const {
    std::vector<CQ> r(dim);
    const std::size_t bit = std::size_t(1) << g;
    for (std::size_t m = 0; m < dim; ++m)
      if ((m & bit) && !v[m].is_zero()) r[m & ~bit] = sign_before(m, g) > 0 ? v[m] : -v[m];
    return r;
  }
  static void axpy(std::vector<CQ>& y, const CQ& a, const std::vector<CQ>& x) {
    if (a.is_zero()) return;
    for (std::size_t k = 0; k < y.size(); ++k)
      if (!x[k].is_zero()) y[k] += a * x[k];
  }
  std::vector<CQ> dbar(int b, const MomentumQ& k, const std::vector<CQ>& v) const {
    M2<CQ> Gm = gamma_low<CQ>(k);
    std::vector<CQ> r = der(tb(b), v);
    for (int a = 1; a <= 2; ++a) axpy(r, Gm[a - 1][b - 1], mul(th(a), v));
    return r;
  }
  std::vector<CQ> dbar2(const MomentumQ& k, const std::vector<CQ>& v) const {
    std::vector<CQ> r(dim);
    const CQ kap(ledger::d2_norm());
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        if (a != b) axpy(r, kap * eps_upper<CQ>(a, b), dbar(a, k, dbar(b, k, v)));
    return r;
  }
  std::vector<CQ> expand(const MomentumQ& k, const std::vector<CQ>& g) const {
    M2<CQ> Gm = gamma_low<CQ>(k);
    auto T = [&](const std::vector<CQ>& v) {
      std::vector<CQ> r(dim);
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) axpy(r, Gm[a - 1][b - 1], mul(th(a), mul(tb(b), v)));
      return r;
    };
    std::vector<CQ> t1 = T(g), t2 = T(t1), r = g;
    axpy(r, CQ(1), t1);
    axpy(r, CQ::frac(1, 2), t2);
    return r;
  }
  std::vector<CQ> conj(const std::vector<CQ>& v) const {
    std::vector<CQ> r(dim);
    for (std::size_t m = 0; m < dim; ++m)
      if (!v[m].is_zero()) r[swap(m)] = csign[m] > 0 ? v[m].conj() : -v[m].conj();
    return r;
  }
};

// One real parameter: the real or imaginary part of a component coefficient.
struct Param {
  int sector;       // 0: wave +p, 1: wave -p
  int field;        // 0 φ, 1 ψ1, 2 ψ2, 3 F
  std::size_t aux;  // auxiliary monomial
  bool imag;
};

std::vector<Param> parameters(int N) {
  std::vector<Param> ps;
  const std::size_t naux = std::size_t(1) << N;
  for (int s = 0; s < 2; ++s)
    for (int f = 0; f < 4; ++f)
      for (std::size_t I = 0; I < naux; ++I) {
        bool odd_field = f == 1 || f == 2;
        bool odd_aux = __builtin_popcountll(I) & 1;
        if (N > 0 && odd_field != odd_aux) continue;
        for (int im = 0; im < 2; ++im) ps.push_back({s, f, I, im == 1});
      }
  return ps;
}

using RealMat = std::vector<std::vector<Q>>;

int rref_q(RealMat& a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Q f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return static_cast<int>(r);
}

std::vector<std::vector<Q>> kernel_q(RealMat a, std::size_t cols) {
  rref_q(a, cols);
  std::vector<int> pivcol;
  for (auto& row : a) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    pivcol.push_back(static_cast<int>(c));
  }
  std::vector<bool> piv(cols, false);
  for (int c : pivcol) piv[c] = true;
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (piv[f]) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (std::size_t r = 0; r < a.size(); ++r) v[pivcol[r]] = -a[r][f];
    out.push_back(v);
  }
  return out;
}

int rank_q(RealMat a, std::size_t cols) { return rref_q(a, cols); }

struct System {
  RealMat columns;  // image of each real parameter, flattened re/im
  bool chiral = true;
};

System build_system(const Combined& C, const std::vector<Param>& ps, const MomentumQ& p, const Q& m) {
  System sys;
  const MomentumQ k[2] = {p, -p};
  for (auto& prm : ps) {
    std::vector<CQ> g(C.dim);
    std::vector<CQ> unit(C.dim);
    unit[prm.aux] = prm.imag ? CQ::i() : CQ(1);
    switch (prm.field) {
      case 0: g = unit; break;
      case 1: g = C.mul(C.th(1), unit); break;
      case 2: g = C.mul(C.th(2), unit); break;
      default: g = C.mul(C.th(1), C.mul(C.th(2), unit)); break;
    }
    std::vector<CQ> f[2] = {std::vector<CQ>(C.dim), std::vector<CQ>(C.dim)};
    f[prm.sector] = C.expand(k[prm.sector], g);
    for (int b = 1; b <= 2; ++b)
      for (auto& x : C.dbar(b, k[prm.sector], f[prm.sector]))
        if (!x.is_zero()) sys.chiral = false;
    // conj moves the wave at k to -k
    std::vector<CQ> cf[2] = {C.conj(f[1]), C.conj(f[0])};
    std::vector<Q> col;
    col.reserve(4 * C.dim);
    for (int s = 0; s < 2; ++s) {
      std::vector<CQ> out = C.dbar2(k[s], cf[s]);
      for (auto& x : out) x = -x;
      Combined::axpy(out, CQ(m), f[s]);
      for (auto& x : out) {
        col.push_back(x.re);
        col.push_back(x.im);
      }
    }
    sys.columns.push_back(std::move(col));
  }
  return sys;
}

RealMat rows_of(const System& s, const std::vector<int>& which) {
  const std::size_t nrows = s.columns.empty() ? 0 : s.columns[0].size();
  RealMat a;
  for (std::size_t r = 0; r < nrows; ++r) {
    std::vector<Q> row;
    bool nz = false;
    for (int c : which) {
      row.push_back(s.columns[c][r]);
      if (sgn(s.columns[c][r]) != 0) nz = true;
    }
    if (nz) a.push_back(std::move(row));
  }
  return a;
}

bool annihilates(const System& s, const std::vector<Q>& v) {
  const std::size_t nrows = s.columns.empty() ? 0 : s.columns[0].size();
  for (std::size_t r = 0; r < nrows; ++r) {
    Q acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (sgn(v[c]) != 0) acc += v[c] * s.columns[c][r];
    if (sgn(acc) != 0) return false;
  }
  return true;
}

std::vector<int> range(std::size_t n) {
  std::vector<int> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<int>(k);
  return r;
}

}  // namespace

WzEquivalenceReport wz_equivalence_check(int N, const MomentumQ& p, const Q& mass) {
  Q m = mass;
  m.canonicalize();
  if (N < 0 || N > 6) throw std::invalid_argument("wz_equivalence_check: N must be in [0, 6]");
  if (minkowski_norm2(p) != m * m || sgn(p.p[0]) <= 0) throw OffOrbit("momentum not on the forward mass shell");
  WzEquivalenceReport rep;
  rep.N = N;

  // scalar system E (ungraded c-numbers)
  const Combined C0(0);
  const auto ps0 = parameters(0);
  const System s0 = build_system(C0, ps0, p, m);
  std::vector<int> bos_cols, fer_cols;
  for (std::size_t c = 0; c < ps0.size(); ++c)
    (ps0[c].field == 1 || ps0[c].field == 2 ? fer_cols : bos_cols).push_back(static_cast<int>(c));
  auto E0 = kernel_q(rows_of(s0, bos_cols), bos_cols.size());
  auto E1 = kernel_q(rows_of(s0, fer_cols), fer_cols.size());
  rep.scalar_bosonic_dim = static_cast<int>(E0.size());
  rep.scalar_fermionic_dim = static_cast<int>(E1.size());

  // solution_generator samples lie in E
  rep.generator_inside = true;
  const std::array<CQ, 2> seeds_u[5] = {
      {CQ(0), CQ(0)}, {CQ(1), CQ(0)}, {CQ::i(), CQ(0)}, {CQ(0), CQ(1)}, {CQ(0), CQ::i()}};
  for (const CQ& a : {CQ(1), CQ::i()})
    for (auto& u : seeds_u) {
      ChiralData<CQ> sol = solution_generator<CQ>(p, CQ(m), a, u);
      std::vector<Q> v(ps0.size(), Q(0));
      const PlaneWaveFn<CQ>* fields[4] = {&sol.phi, &sol.psi[0], &sol.psi[1], &sol.F};
      for (std::size_t c = 0; c < ps0.size(); ++c) {
        const MomentumQ kk = ps0[c].sector == 0 ? p : -p;
        for (auto& t : fields[ps0[c].field]->terms)
          if (t.first == kk) v[c] = ps0[c].imag ? t.second.im : t.second.re;
      }
      if (!annihilates(s0, v)) rep.generator_inside = false;
    }

  if (N == 0) {
    rep.unknowns = static_cast<int>(ps0.size());
    rep.chiral = s0.chiral;
    rep.solution_dim = static_cast<int>(kernel_q(rows_of(s0, range(ps0.size())), ps0.size()).size());
    rep.predicted_dim = rep.scalar_bosonic_dim + rep.scalar_fermionic_dim;
    rep.predicted_inside = rep.solution_dim >= 0;
    std::vector<std::vector<Q>> pred;
    for (auto& e : E0) {
      std::vector<Q> v(ps0.size(), Q(0));
      for (std::size_t j = 0; j < bos_cols.size(); ++j) v[bos_cols[j]] = e[j];
      pred.push_back(v);
    }
    for (auto& e : E1) {
      std::vector<Q> v(ps0.size(), Q(0));
      for (std::size_t j = 0; j < fer_cols.size(); ++j) v[fer_cols[j]] = e[j];
      pred.push_back(v);
    }
    for (auto& v : pred) rep.predicted_inside = rep.predicted_inside && annihilates(s0, v);
    rep.spans_equal = rep.predicted_inside && rank_q(pred, ps0.size()) == rep.solution_dim;
    return rep;
  }

  const Combined C(N);
  const auto ps = parameters(N);
  const System s = build_system(C, ps, p, m);
  rep.unknowns = static_cast<int>(ps.size());
  rep.chiral = s.chiral;
  rep.solution_dim = static_cast<int>(kernel_q(rows_of(s, range(ps.size())), ps.size()).size());

  // Λ_even ⊗ E0 ⊕ Λ_odd ⊗ E1: copy each scalar solution onto a phase times ξ_I, the phase making
  // the coefficient real; odd ξ_I pick up one more quarter turn from passing θb
  std::vector<std::vector<Q>> pred;
  const std::size_t naux = std::size_t(1) << N;
  for (std::size_t I = 0; I < naux; ++I) {
    const int r = __builtin_popcountll(I);
    const bool odd = r & 1;
    const int quarter = (r * (r - 1) / 2 + (odd ? 1 : 0)) % 4;
    const auto& E = odd ? E1 : E0;
    const auto& cols = odd ? fer_cols : bos_cols;
    for (auto& e : E) {
      std::vector<Q> v(ps.size(), Q(0));
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Param& q = ps0[cols[j]];
        const int turn = (quarter + (q.imag ? 1 : 0)) % 4;
        const bool imag = turn % 2 == 1;
        const Q val = turn < 2 ? e[j] : Q(-e[j]);
        for (std::size_t c = 0; c < ps.size(); ++c)
          if (ps[c].sector == q.sector && ps[c].field == q.field && ps[c].imag == imag && ps[c].aux == I)
            v[c] += val;
      }
      pred.push_back(v);
    }
  }
  rep.predicted_dim = rank_q(pred, ps.size());
  rep.predicted_inside = true;
  for (auto& v : pred) rep.predicted_inside = rep.predicted_inside && annihilates(s, v);
  rep.spans_equal = rep.predicted_inside && rep.predicted_dim == rep.solution_dim;
  return rep;
}

}  // namespace superkit
