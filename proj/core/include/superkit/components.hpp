#pragma once

// Chiral superfields, the Wess-Zumino operator and its component system.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "superkit/superfourier.hpp"

namespace superkit {

struct NotChiral : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GridTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct ChiralData {
  PlaneWaveFn<S> phi;
  std::array<PlaneWaveFn<S>, 2> psi;
  PlaneWaveFn<S> F;
};

// T(k) = Γ_{ab}(k) θ^a θb^b, so that on a wave T = -iΓ^μ_{ab} θ^a θb^b ∂_μ.
template <class S>
Op16<S> chiral_shift(const typename Sc<S>::Mom& k) {
  M2<S> G = gamma_low<S>(k);
  Op16<S> T;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (!Sc<S>::is_zero(G[a - 1][b - 1]))
        T = T + G[a - 1][b - 1] * (gen_mul<S>(theta(a)) * gen_mul<S>(thetabar(b)));
  return T;
}

// f = e^T (φ + θ^a ψ_a + θ1 θ2 F); T is nilpotent of order 3.
template <class S>
SuperFunction<S> chiral_expand(const ChiralData<S>& c) {
  SuperFunction<S> g;
  for (auto& t : c.phi.terms) g.add(t.first, 0, t.second);
  for (int a = 1; a <= 2; ++a)
    for (auto& t : c.psi[a - 1].terms) g.add(t.first, 1 << (a - 1), t.second);
  for (auto& t : c.F.terms) g.add(t.first, 3, t.second);
  return g.map([](const auto& k) {
    Op16<S> T = chiral_shift<S>(k);
    return Op16<S>::identity() + T + (Sc<S>::from_int(1) / Sc<S>::from_int(2)) * (T * T);
  });
}

template <class S>
ChiralData<S> chiral_components(const SuperFunction<S>& f) {
  return {f.component(0), {f.component(1), f.component(2)}, f.component(3)};
}

template <class S>
bool is_chiral(const SuperFunction<S>& f, double tol = 0) {
  return apply_Dbar(1, f).is_zero(tol) && apply_Dbar(2, f).is_zero(tol);
}
template <class S>
bool is_antichiral(const SuperFunction<S>& f, double tol = 0) {
  return apply_D(1, f).is_zero(tol) && apply_D(2, f).is_zero(tol);
}

// -D̄² conj(f) + m f
template <class S>
SuperFunction<S> wz_operator(const SuperFunction<S>& f, const S& m, double tol = 0) {
  if (!is_chiral(f, tol)) throw NotChiral("wz_operator: input is not chiral");
  return m * f - apply_Dbar2(conjugate_sf(f));
}

template <class S>
struct ComponentResidual {
  PlaneWaveFn<S> kg;                      // (□ + m²) φ
  std::array<PlaneWaveFn<S>, 2> dirac;    // iΓ^μ_{ab} ∂_μ conj(ψ)^b + m ψ_a
  PlaneWaveFn<S> f_relation;              // F - c m conj(φ), c from the ledger
  double max_abs() const {
    return std::max({kg.max_abs(), dirac[0].max_abs(), dirac[1].max_abs(), f_relation.max_abs()});
  }
  bool is_zero(double tol = 0) const {
    return kg.is_zero(tol) && dirac[0].is_zero(tol) && dirac[1].is_zero(tol) && f_relation.is_zero(tol);
  }
};

// conj(ψ)^b = conj(ψ)_c ε^{cb}
template <class S>
std::array<PlaneWaveFn<S>, 2> raised_conj(const std::array<PlaneWaveFn<S>, 2>& psi) {
  const S e = Sc<S>::from_int(ledger::kEpsUpper12);
  return {Sc<S>::from_int(-1) * e * psi[1].conj(), e * psi[0].conj()};
}

template <class S>
ComponentResidual<S> component_residual(const ChiralData<S>& c, const S& m) {
  ComponentResidual<S> r;
  r.kg = c.phi.box() + (m * m) * c.phi;
  auto up = raised_conj(c.psi);
  for (int a = 0; a < 2; ++a) {
    PlaneWaveFn<S> d = m * c.psi[a];
    // iΓ^μ ∂_μ on e^{i<k,x>} is -Γ(k)
    for (int b = 0; b < 2; ++b)
      for (auto& t : up[b].terms) d.add(t.first, Sc<S>::from_int(-1) * gamma_low<S>(t.first)[a][b] * t.second);
    r.dirac[a] = d.pruned();
  }
  r.f_relation = (c.F - (Sc<S>::from_int(ledger::kFPhiFactor) * m) * c.phi.conj()).pruned();
  r.kg = r.kg.pruned();
  return r;
}

template <class S>
ComponentResidual<S> component_reduce(const SuperFunction<S>& f, const S& m, double tol = 0) {
  if (!is_chiral(f, tol)) throw NotChiral("component_reduce: input is not chiral");
  return component_residual(chiral_components(f), m);
}

// On-shell two-frequency solution: φ = a e^{i<p,x>} + conj(a) e^{-i<p,x>},
// F = c m conj(φ), ψ = u e^{i<p,x>} + w e^{-i<p,x>} with w fixed by the Dirac equation.
template <class S>
ChiralData<S> solution_generator(const typename Sc<S>::Mom& p, const S& m, const S& a,
                                 const std::array<S, 2>& u, double tol = 1e-9);

template <>
ChiralData<CQ> solution_generator<CQ>(const MomentumQ& p, const CQ& m, const CQ& a,
                                      const std::array<CQ, 2>& u, double tol);
template <>
ChiralData<cd> solution_generator<cd>(const Momentum& p, const cd& m, const cd& a,
                                      const std::array<cd, 2>& u, double tol);

// ---- grids -------------------------------------------------------------------

struct Grid4 {
  int n = 5;                       // points per axis
  double h = 0.1;                  // spacing
  std::array<double, 4> origin{};
  bool periodic = false;
  std::size_t size() const { return std::size_t(n) * n * n * n; }
  std::size_t index(const std::array<int, 4>& i) const { return ((std::size_t(i[0]) * n + i[1]) * n + i[2]) * n + i[3]; }
  std::array<double, 4> point(const std::array<int, 4>& i) const {
    return {origin[0] + i[0] * h, origin[1] + i[1] * h, origin[2] + i[2] * h, origin[3] + i[3] * h};
  }
};

struct GridChiral {
  Grid4 grid;
  std::vector<cd> phi, psi1, psi2, F;
};

template <class S>
GridChiral sample(const ChiralData<S>& c, const Grid4& g) {
  if (g.n < 5) throw GridTooSmall("grid needs at least 5 points per axis");
  GridChiral s{g, {}, {}, {}, {}};
  for (auto* v : {&s.phi, &s.psi1, &s.psi2, &s.F}) v->resize(g.size());
  std::array<int, 4> i{};
  for (i[0] = 0; i[0] < g.n; ++i[0])
    for (i[1] = 0; i[1] < g.n; ++i[1])
      for (i[2] = 0; i[2] < g.n; ++i[2])
        for (i[3] = 0; i[3] < g.n; ++i[3]) {
          auto x = g.point(i);
          std::size_t k = g.index(i);
          s.phi[k] = c.phi.eval(x);
          s.psi1[k] = c.psi[0].eval(x);
          s.psi2[k] = c.psi[1].eval(x);
          s.F[k] = c.F.eval(x);
        }
  return s;
}

struct GridResidual {
  double max_kg = 0;
  double max_dirac = 0;
  double max_f = 0;
};

// Second-order central differences at interior points.
GridResidual grid_residual(const GridChiral& c, double m);

// ---- representability -----------------------------------------------------------

struct WzEquivalenceReport {
  int N = 0;
  int unknowns = 0;              // real parameters of the Λ_N-valued chiral data
  int solution_dim = 0;          // real dimension of the Λ_N solution set
  int predicted_dim = 0;         // real dimension of Λ_even ⊗ E0 ⊕ Λ_odd ⊗ E1
  int scalar_bosonic_dim = 0;    // real dim of E0
  int scalar_fermionic_dim = 0;  // real dim of E1
  bool chiral = true;            // every Λ_N chiral expansion is annihilated by D̄
  bool predicted_inside = false;
  bool spans_equal = false;
  bool generator_inside = false; // solution_generator outputs lie in E
  bool passed() const { return chiral && predicted_inside && spans_equal && generator_inside; }
};

// Λ_N-valued chiral data on the frequency pair ±p (p on the orbit of mass m, exact),
// φ and F even-valued, ψ odd-valued.  N = 0 is the ungraded c-number system.
WzEquivalenceReport wz_equivalence_check(int N, const MomentumQ& p, const Q& m);

}  // namespace superkit
