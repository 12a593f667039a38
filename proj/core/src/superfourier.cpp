#include "superkit/superfourier.hpp"

namespace superkit {

namespace {

constexpr int th(int a) { return 1 << (a - 1); }
constexpr int tb(int a) { return 4 << (a - 1); }

std::array<HodgeEntry, kDimW> make_table() {
  std::array<HodgeEntry, kDimW> t{};
  t[0] = {15, 1, 0};
  for (int a = 1; a <= 2; ++a) {
    t[th(a)] = {th(a) | 12, 0, 1};
    t[tb(a)] = {3 | tb(a), 0, 1};
    t[3 | tb(a)] = {tb(a), 0, 1};
    t[th(a) | 12] = {th(a), 0, 1};
    for (int b = 1; b <= 2; ++b) t[th(a) | tb(b)] = {th(a) | tb(b), -1, 0};
  }
  t[3] = {12, 1, 0};
  t[12] = {3, 1, 0};
  t[15] = {0, 1, 0};
  return t;
}

Multivector apply_cq(const Op16<CQ>& op, const Multivector& m) {
  Multivector r;
  r.c = op.apply(m.c);
  return r;
}

}  // namespace

const std::array<HodgeEntry, kDimW>& hodge_table() {
  static const auto t = make_table();
  return t;
}

Multivector hodge_star(const Multivector& m) { return apply_cq(hodge_op<CQ>(), m); }
Multivector hodge_star_inverse(const Multivector& m) { return apply_cq(hodge_inverse_op<CQ>(), m); }

int conj_sf_sign(int mask) {
  // c(g1 g2 ... gn) = c(gn) ... c(g1): multiply the swapped generators on the left in increasing order
  Vec16<CQ> v{};
  v[0] = CQ(1);
  for (int g = 0; g < 4; ++g)
    if (mask & (1 << g)) v = gen_mul<CQ>((g + 2) % 4).apply(v);
  return v[swap_sides(mask)] == CQ(1) ? 1 : -1;
}

ExchangeReport exchange_check(const Multivector& v) {
  const Op16<CQ> H = hodge_op<CQ>();
  const CQ I = CQ::i();
  ExchangeReport rep;
  auto record = [&](int k, const Vec16<CQ>& lhs, const Vec16<CQ>& rhs) {
    for (int i = 0; i < kDimW; ++i) {
      CQ d = lhs[i] - rhs[i];
      if (!d.is_zero()) rep.exact_zero = false;
      double e = std::abs(d.to_complex());
      rep.per_identity[k] = std::max(rep.per_identity[k], e);
      rep.max_discrepancy = std::max(rep.max_discrepancy, e);
    }
  };
  const Vec16<CQ> sv = H.apply(v.c);
  // plus side uses generators θ^a / t^a (index a-1), minus side θb^a / tb^a (index a+1)
  for (int side = 0; side < 2; ++side) {
    int off = side == 0 ? 0 : 2;
    for (int a = 1; a <= 2; ++a) {
      Vec16<CQ> lhs = H.apply(gen_der<CQ>(off + a - 1).apply(v.c)), rhs{};
      for (int b = 1; b <= 2; ++b) {
        Vec16<CQ> t = gen_mul<CQ>(off + b - 1).apply(sv);
        CQ k = I * eps_lower<CQ>(a, b);
        for (int i = 0; i < kDimW; ++i) rhs[i] += k * t[i];
      }
      record(2 * side, lhs, rhs);

      lhs = H.apply(gen_mul<CQ>(off + a - 1).apply(v.c));
      rhs = {};
      for (int b = 1; b <= 2; ++b) {
        Vec16<CQ> t = gen_der<CQ>(off + b - 1).apply(sv);
        CQ k = -(I * eps_upper<CQ>(a, b));
        for (int i = 0; i < kDimW; ++i) rhs[i] += k * t[i];
      }
      record(2 * side + 1, lhs, rhs);
    }
  }
  return rep;
}

// ---- AuxGrassmann ------------------------------------------------------------

namespace {

// sign of (monomial a)(monomial b) relative to the sorted monomial a|b
int merge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a; x; x &= x - 1) {
    int i = __builtin_ctz(x);
    swaps += __builtin_popcount(b & ((1u << i) - 1));
  }
  return swaps & 1 ? -1 : 1;
}

void same_size(const AuxGrassmann& a, const AuxGrassmann& b) {
  if (a.n != b.n) throw std::invalid_argument("AuxGrassmann: generator counts differ");
}

}  // namespace

bool AuxGrassmann::is_zero() const {
  for (auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}
bool AuxGrassmann::is_even() const {
  for (std::size_t k = 0; k < c.size(); ++k)
    if ((__builtin_popcount(k) & 1) && !c[k].is_zero()) return false;
  return true;
}
bool AuxGrassmann::is_odd() const {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!(__builtin_popcount(k) & 1) && !c[k].is_zero()) return false;
  return true;
}
AuxGrassmann AuxGrassmann::conj() const {
  AuxGrassmann r = *this;
  for (auto& x : r.c) x = x.conj();
  return r;
}
AuxGrassmann operator+(const AuxGrassmann& a, const AuxGrassmann& b) {
  same_size(a, b);
  AuxGrassmann r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
  return r;
}
AuxGrassmann operator-(const AuxGrassmann& a, const AuxGrassmann& b) {
  same_size(a, b);
  AuxGrassmann r = a;
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] -= b.c[k];
  return r;
}
AuxGrassmann operator*(const AuxGrassmann& a, const AuxGrassmann& b) {
  same_size(a, b);
  AuxGrassmann r(a.n);
  for (unsigned i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (unsigned j = 0; j < b.c.size(); ++j) {
      if ((i & j) || b.c[j].is_zero()) continue;
      CQ t = a.c[i] * b.c[j];
      if (merge_sign(i, j) < 0) t = -t;
      r.c[i | j] += t;
    }
  }
  return r;
}
AuxGrassmann operator*(const CQ& k, const AuxGrassmann& a) {
  AuxGrassmann r = a;
  for (auto& x : r.c) x = k * x;
  return r;
}

SuperPoint SuperPoint::zero(int N) {
  SuperPoint p;
  for (auto& x : p.v) x = AuxGrassmann(N);
  for (auto& x : p.s) x = AuxGrassmann(N);
  for (auto& x : p.t) x = AuxGrassmann(N);
  return p;
}

namespace {

void check_grades(const SuperPoint& u) {
  for (auto& x : u.v)
    if (!x.is_even()) throw GradeMismatch("even coordinate has an odd part");
  for (auto& x : u.s)
    if (!x.is_odd()) throw GradeMismatch("odd coordinate has an even part");
  for (auto& x : u.t)
    if (!x.is_odd()) throw GradeMismatch("odd coordinate has an even part");
}

MomentumQ unit(int mu) {
  MomentumQ e;
  e.p[mu] = 1;
  return e;
}

}  // namespace

SuperPoint group_law(const SuperPoint& u, const SuperPoint& w) {
  check_grades(u);
  check_grades(w);
  SuperPoint r = u;
  const CQ I = CQ::i();
  for (int mu = 0; mu < 4; ++mu) {
    M2<CQ> G = gamma_low<CQ>(unit(mu));
    AuxGrassmann shift(u.v[mu].n);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (G[a][b].is_zero()) continue;
        shift = shift + (I * G[a][b]) * (u.s[a] * w.t[b] - w.s[a] * u.t[b]);
      }
    r.v[mu] = u.v[mu] + w.v[mu] + shift;
  }
  for (int a = 0; a < 2; ++a) {
    r.s[a] = u.s[a] + w.s[a];
    r.t[a] = u.t[a] + w.t[a];
  }
  return r;
}

SuperPoint group_inverse(const SuperPoint& u) {
  check_grades(u);
  SuperPoint r = u;
  for (auto& x : r.v) x = CQ(-1) * x;
  for (auto& x : r.s) x = CQ(-1) * x;
  for (auto& x : r.t) x = CQ(-1) * x;
  return r;
}

}  // namespace superkit
