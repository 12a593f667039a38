#pragma once

// Superfunctions on Minkowski superspacetime as finite plane-wave sums, the
// super Fourier transform and the odd vector fields.
//
// Θ-side monomials use the same bitmask layout as W: bit 0 = θ1, bit 1 = θ2,
// bit 2 = θb1, bit 3 = θb2.  A superfunction is stored as a list of waves
// (k, v): v is the 16-vector of Grassmann coefficients multiplying e^{i<k,x>}.
// On the momentum side a wave (k, v) is the value of the transform at k.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "superkit/generic.hpp"
#include "superkit/ledger.hpp"

namespace superkit {

enum class Side { Position, Momentum };

struct SideMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
struct PlaneWaveFn {
  using Mom = typename Sc<S>::Mom;
  std::vector<std::pair<Mom, S>> terms;  // amplitude a at wavevector k: a e^{i<k,x>}

  void add(const Mom& k, const S& a) {
    for (auto& t : terms)
      if (t.first == k) { t.second += a; return; }
    terms.emplace_back(k, a);
  }
  static PlaneWaveFn wave(const Mom& k, const S& a) { PlaneWaveFn f; f.add(k, a); return f; }
  PlaneWaveFn& operator+=(const PlaneWaveFn& o) {
    for (auto& t : o.terms) add(t.first, t.second);
    return *this;
  }
  friend PlaneWaveFn operator+(PlaneWaveFn a, const PlaneWaveFn& b) { return a += b; }
  friend PlaneWaveFn operator*(const S& s, const PlaneWaveFn& f) {
    PlaneWaveFn r;
    for (auto& t : f.terms) r.add(t.first, s * t.second);
    return r;
  }
  friend PlaneWaveFn operator-(PlaneWaveFn a, const PlaneWaveFn& b) {
    return a += Sc<S>::from_int(-1) * b;
  }
  // ∂_μ
  PlaneWaveFn deriv(int mu) const {
    PlaneWaveFn r;
    for (auto& t : terms) r.add(t.first, Sc<S>::I() * Sc<S>::comp(t.first, mu) * t.second);
    return r;
  }
  // □ = ∂0² - ∂1² - ∂2² - ∂3²
  PlaneWaveFn box() const {
    PlaneWaveFn r;
    for (auto& t : terms) r.add(t.first, Sc<S>::from_int(-1) * minkowski2<S>(t.first) * t.second);
    return r;
  }
  PlaneWaveFn conj() const {
    PlaneWaveFn r;
    for (auto& t : terms) r.add(-t.first, Sc<S>::conj(t.second));
    return r;
  }
  PlaneWaveFn pruned(double tol = 0) const {
    PlaneWaveFn r;
    for (auto& t : terms)
      if (Sc<S>::abs(t.second) > tol && !Sc<S>::is_zero(t.second)) r.terms.push_back(t);
    return r;
  }
  bool is_zero(double tol = 0) const { return pruned(tol).terms.empty(); }
  double max_abs() const {
    double m = 0;
    for (auto& t : terms) m = std::max(m, Sc<S>::abs(t.second));
    return m;
  }
  cd eval(const std::array<double, 4>& x) const {
    cd s = 0;
    for (auto& t : terms) {
      double ph = 0;
      for (int mu = 0; mu < 4; ++mu) ph += Sc<S>::to_cd(Sc<S>::comp(t.first, mu)).real() * x[mu];
      s += Sc<S>::to_cd(t.second) * std::exp(cd(0, ph));
    }
    return s;
  }
};

template <class S>
struct Wave {
  typename Sc<S>::Mom k;
  Vec16<S> v{};
};

template <class S>
struct SuperFunction {
  using Mom = typename Sc<S>::Mom;
  Side side = Side::Position;
  std::vector<Wave<S>> waves;

  Vec16<S>& at(const Mom& k) {
    for (auto& w : waves)
      if (w.k == k) return w.v;
    waves.push_back({k, {}});
    return waves.back().v;
  }
  void add(const Mom& k, int mask, const S& a) { at(k)[mask] += a; }
  PlaneWaveFn<S> component(int mask) const {
    PlaneWaveFn<S> f;
    for (auto& w : waves)
      if (!Sc<S>::is_zero(w.v[mask])) f.add(w.k, w.v[mask]);
    return f;
  }
  void set_component(int mask, const PlaneWaveFn<S>& f) {
    for (auto& w : waves) w.v[mask] = S{};
    for (auto& t : f.terms) add(t.first, mask, t.second);
  }
  SuperFunction& operator+=(const SuperFunction& o) {
    if (!waves.empty() && !o.waves.empty() && side != o.side) throw SideMismatch("adding across sides");
    if (waves.empty()) side = o.side;
    for (auto& w : o.waves) {
      auto& v = at(w.k);
      for (int i = 0; i < kDimW; ++i) v[i] += w.v[i];
    }
    return *this;
  }
  friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
  friend SuperFunction operator*(const S& s, SuperFunction f) {
    for (auto& w : f.waves)
      for (auto& x : w.v) x = s * x;
    return f;
  }
  friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) {
    return a += Sc<S>::from_int(-1) * b;
  }
  double max_abs() const {
    double m = 0;
    for (auto& w : waves)
      for (auto& x : w.v) m = std::max(m, Sc<S>::abs(x));
    return m;
  }
  bool is_zero(double tol = 0) const {
    for (auto& w : waves)
      for (auto& x : w.v)
        if (!Sc<S>::is_zero(x) && Sc<S>::abs(x) > tol) return false;
    return true;
  }
  // Applies the operator-valued function M(k) wave by wave.
  template <class F>
  SuperFunction map(F&& M) const {
    SuperFunction r;
    r.side = side;
    for (auto& w : waves) r.at(w.k) = M(w.k).apply(w.v);
    return r;
  }
};

template <class S>
void require_side(const SuperFunction<S>& f, Side s) {
  if (f.side != s) throw SideMismatch(s == Side::Position ? "expected a position-side superfunction"
                                                          : "expected a momentum-side superfunction");
}

// ---- odd vector fields -----------------------------------------------------

inline int theta(int a) { return a - 1; }      // θ^a generator index
inline int thetabar(int b) { return b + 1; }   // θb^b generator index

// Per-wave matrices.  ∂_μ acts on e^{i<k,x>} as i k_μ, and with D_a = ∂/∂θ^a - iΓ^μ_{ab} θb^b ∂_μ
// the factor -i·i k_μ Γ^μ_{ab} is Γ_{ab}(k).
template <class S>
Op16<S> op_D(int a, const typename Sc<S>::Mom& k) {
  M2<S> G = gamma_low<S>(k);
  Op16<S> r = gen_der<S>(theta(a));
  for (int b = 1; b <= 2; ++b) r = r + G[a - 1][b - 1] * gen_mul<S>(thetabar(b));
  return r;
}
template <class S>
Op16<S> op_Dbar(int b, const typename Sc<S>::Mom& k) {
  M2<S> G = gamma_low<S>(k);
  Op16<S> r = gen_der<S>(thetabar(b));
  for (int a = 1; a <= 2; ++a) r = r + G[a - 1][b - 1] * gen_mul<S>(theta(a));
  return r;
}
template <class S>
Op16<S> op_Q(int a, const typename Sc<S>::Mom& k) {
  M2<S> G = gamma_low<S>(k);
  Op16<S> r = gen_der<S>(theta(a));
  for (int b = 1; b <= 2; ++b) r = r - G[a - 1][b - 1] * gen_mul<S>(thetabar(b));
  return r;
}
template <class S>
Op16<S> op_Qbar(int b, const typename Sc<S>::Mom& k) {
  M2<S> G = gamma_low<S>(k);
  Op16<S> r = gen_der<S>(thetabar(b));
  for (int a = 1; a <= 2; ++a) r = r - G[a - 1][b - 1] * gen_mul<S>(theta(a));
  return r;
}
// P_μ = -i ∂_μ
template <class S>
Op16<S> op_P(int mu, const typename Sc<S>::Mom& k) {
  return Sc<S>::comp(k, mu) * Op16<S>::identity();
}

template <class S>
S eps_upper(int a, int b) {
  if (a == b) return S{};
  return Sc<S>::from_int(a == 1 ? ledger::kEpsUpper12 : -ledger::kEpsUpper12);
}
template <class S>
S eps_lower(int a, int b) {
  if (a == b) return S{};
  return Sc<S>::from_int(a == 1 ? ledger::kEpsLower12 : -ledger::kEpsLower12);
}
template <class S>
S d2_kappa();
template <>
inline CQ d2_kappa<CQ>() { return CQ(ledger::d2_norm()); }
template <>
inline cd d2_kappa<cd>() { return cd(ledger::d2_norm().get_d(), 0); }

// D² = κ ε^{ab} D_a D_b
template <class S>
Op16<S> op_D2(const typename Sc<S>::Mom& k) {
  Op16<S> r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (a != b) r = r + eps_upper<S>(a, b) * (op_D<S>(a, k) * op_D<S>(b, k));
  return d2_kappa<S>() * r;
}
template <class S>
Op16<S> op_Dbar2(const typename Sc<S>::Mom& k) {
  Op16<S> r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (a != b) r = r + eps_upper<S>(a, b) * (op_Dbar<S>(a, k) * op_Dbar<S>(b, k));
  return d2_kappa<S>() * r;
}

template <class S>
SuperFunction<S> apply_D(int a, const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_D<S>(a, k); });
}
template <class S>
SuperFunction<S> apply_Dbar(int b, const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_Dbar<S>(b, k); });
}
template <class S>
SuperFunction<S> apply_Q(int a, const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_Q<S>(a, k); });
}
template <class S>
SuperFunction<S> apply_Qbar(int b, const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_Qbar<S>(b, k); });
}
template <class S>
SuperFunction<S> apply_P(int mu, const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_P<S>(mu, k); });
}
template <class S>
SuperFunction<S> apply_D2(const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_D2<S>(k); });
}
template <class S>
SuperFunction<S> apply_Dbar2(const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  return f.map([&](const auto& k) { return op_Dbar2<S>(k); });
}

// ---- Hodge star and transform ---------------------------------------------

struct HodgeEntry {
  int target;
  int re, im;  // coefficient re + i·im
};
// Image of each Θ-monomial.
const std::array<HodgeEntry, kDimW>& hodge_table();

template <class S>
Op16<S> hodge_op() {
  Op16<S> r;
  for (int m = 0; m < kDimW; ++m) {
    auto e = hodge_table()[m];
    r.at(e.target, m) = Sc<S>::from_int(e.re) + Sc<S>::I() * Sc<S>::from_int(e.im);
  }
  return r;
}
template <class S>
Op16<S> hodge_inverse_op() {
  Op16<S> r;
  for (int m = 0; m < kDimW; ++m) {
    auto e = hodge_table()[m];
    // coefficients are units: inverse of re + i im is re - i im
    r.at(m, e.target) = Sc<S>::from_int(e.re) - Sc<S>::I() * Sc<S>::from_int(e.im);
  }
  return r;
}

Multivector hodge_star(const Multivector& m);
Multivector hodge_star_inverse(const Multivector& m);

template <class S>
SuperFunction<S> super_ft(const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  const Op16<S> H = hodge_op<S>();
  SuperFunction<S> r = f.map([&](const auto&) { return H; });
  r.side = Side::Momentum;
  return r;
}
template <class S>
SuperFunction<S> inverse_super_ft(const SuperFunction<S>& f) {
  require_side(f, Side::Momentum);
  const Op16<S> H = hodge_inverse_op<S>();
  SuperFunction<S> r = f.map([&](const auto&) { return H; });
  r.side = Side::Position;
  return r;
}

// ∫ θ1 θ2 θb1 θb2 dθ dθb = 1
template <class S>
PlaneWaveFn<S> berezin_integral(const SuperFunction<S>& f) {
  return f.component(kDimW - 1);
}
template <class S>
PlaneWaveFn<S> body_restriction(const SuperFunction<S>& f) {
  return f.component(0);
}

// ---- conjugation ------------------------------------------------------------

// Sign s with c(monomial m) = s · (monomial swap_sides(m)), c the antilinear
// anti-automorphism θ^a <-> θb^a, c(xy) = c(y) c(x).
int conj_sf_sign(int mask);

template <class S>
SuperFunction<S> conjugate_sf(const SuperFunction<S>& f) {
  require_side(f, Side::Position);
  SuperFunction<S> r;
  r.side = f.side;
  for (auto& w : f.waves) {
    auto& v = r.at(-w.k);
    for (int m = 0; m < kDimW; ++m)
      if (!Sc<S>::is_zero(w.v[m])) v[swap_sides(m)] += Sc<S>::from_int(conj_sf_sign(m)) * Sc<S>::conj(w.v[m]);
  }
  return r;
}

// ---- exchange identities -----------------------------------------------------

struct ExchangeReport {
  double max_discrepancy = 0;
  bool exact_zero = true;
  std::array<double, 4> per_identity{};
};

// On an x-independent element v of Λ(θ):
//   ⋆(∂v/∂θ^a) = i ε_{ab} t^b ⋆v,     ⋆(θ^a v) = -i ε^{ab} ∂/∂t^b ⋆v,
//   ⋆(∂v/∂θb^a) = i ε_{ab} tb^b ⋆v,   ⋆(θb^a v) = -i ε^{ab} ∂/∂tb^b ⋆v.
ExchangeReport exchange_check(const Multivector& v);

// ---- auxiliary Grassmann algebra and the group law ------------------------

struct GradeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exterior algebra on N odd generators with CQ coefficients.
struct AuxGrassmann {
  int n = 0;
  std::vector<CQ> c;  // index = generator bitmask

  AuxGrassmann() = default;
  explicit AuxGrassmann(int N) : n(N), c(std::size_t(1) << N) {}
  static AuxGrassmann scalar(int N, const CQ& x) { AuxGrassmann a(N); a.c[0] = x; return a; }
  static AuxGrassmann generator(int N, int g) { AuxGrassmann a(N); a.c[std::size_t(1) << g] = CQ(1); return a; }

  bool is_zero() const;
  bool is_even() const;
  bool is_odd() const;
  AuxGrassmann conj() const;  // coefficientwise conjugation
  friend AuxGrassmann operator+(const AuxGrassmann& a, const AuxGrassmann& b);
  friend AuxGrassmann operator-(const AuxGrassmann& a, const AuxGrassmann& b);
  friend AuxGrassmann operator*(const AuxGrassmann& a, const AuxGrassmann& b);
  friend AuxGrassmann operator*(const CQ& k, const AuxGrassmann& a);
  friend bool operator==(const AuxGrassmann& a, const AuxGrassmann& b) { return a.n == b.n && a.c == b.c; }
};

struct SuperPoint {
  std::array<AuxGrassmann, 4> v;  // even coordinates
  std::array<AuxGrassmann, 2> s;  // odd, θ-directions
  std::array<AuxGrassmann, 2> t;  // odd, θb-directions
  static SuperPoint zero(int N);
  friend bool operator==(const SuperPoint& a, const SuperPoint& b) {
    return a.v == b.v && a.s == b.s && a.t == b.t;
  }
};

// (v,s,t)*(v',s',t') = (v + v' + iΓ^μ_{ab}(s^a t'^b - s'^a t^b), s+s', t+t')
// with Γ^μ_{ab} = (J B(e^μ) J)_{ab}.
SuperPoint group_law(const SuperPoint& u, const SuperPoint& w);
SuperPoint group_inverse(const SuperPoint& u);

}  // namespace superkit
