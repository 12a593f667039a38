#pragma once

// Scalar-generic helpers shared by the exact (CQ) and floating (cd) code paths.

#include <array>
#include <cmath>
#include <complex>

#include "superkit/algebra.hpp"
#include "superkit/spin_geometry.hpp"

namespace superkit {

template <class S>
struct Sc;

template <>
struct Sc<CQ> {
  using Mom = MomentumQ;
  static CQ conj(const CQ& x) { return x.conj(); }
  static bool is_zero(const CQ& x) { return x.is_zero(); }
  static double abs(const CQ& x) { return std::abs(x.to_complex()); }
  static CQ I() { return CQ::i(); }
  static CQ real(const Q& x) { return CQ(x); }
  static CQ comp(const Mom& p, int mu) { return CQ(p.p[mu]); }
  static cd to_cd(const CQ& x) { return x.to_complex(); }
  static CQ from_int(long k) { return CQ(k); }
};

template <>
struct Sc<cd> {
  using Mom = Momentum;
  static cd conj(const cd& x) { return std::conj(x); }
  static bool is_zero(const cd& x) { return x == cd(0); }
  static double abs(const cd& x) { return std::abs(x); }
  static cd I() { return cd(0, 1); }
  static cd real(double x) { return cd(x, 0); }
  static cd comp(const Mom& p, int mu) { return cd(p.p[mu], 0); }
  static cd to_cd(const cd& x) { return x; }
  static cd from_int(long k) { return cd(double(k), 0); }
};

inline bool operator==(const MomentumQ& a, const MomentumQ& b) { return a.p == b.p; }
inline bool operator==(const Momentum& a, const Momentum& b) { return a.p == b.p; }
inline MomentumQ operator-(const MomentumQ& a) {
  MomentumQ r;
  for (int k = 0; k < 4; ++k) r.p[k] = -a.p[k];
  return r;
}
inline Momentum operator-(const Momentum& a) {
  Momentum r;
  for (int k = 0; k < 4; ++k) r.p[k] = -a.p[k];
  return r;
}
inline bool is_zero_momentum(const MomentumQ& a) {
  for (auto& x : a.p) if (sgn(x) != 0) return false;
  return true;
}
inline bool is_zero_momentum(const Momentum& a) {
  for (auto x : a.p) if (x != 0) return false;
  return true;
}

template <class S>
using Vec16 = std::array<S, kDimW>;
template <class S>
using M2 = std::array<std::array<S, 2>, 2>;

template <class S>
struct Op16 {
  std::array<S, kDimW * kDimW> a{};

  static Op16 identity() {
    Op16 r;
    for (int k = 0; k < kDimW; ++k) r.at(k, k) = Sc<S>::from_int(1);
    return r;
  }
  S& at(int r, int c) { return a[r * kDimW + c]; }
  const S& at(int r, int c) const { return a[r * kDimW + c]; }

  Vec16<S> apply(const Vec16<S>& v) const {
    Vec16<S> out{};
    for (int c = 0; c < kDimW; ++c) {
      if (Sc<S>::is_zero(v[c])) continue;
      for (int r = 0; r < kDimW; ++r)
        if (!Sc<S>::is_zero(at(r, c))) out[r] += at(r, c) * v[c];
    }
    return out;
  }
  friend Op16 operator*(const Op16& x, const Op16& y) {
    Op16 r;
    for (int i = 0; i < kDimW; ++i)
      for (int k = 0; k < kDimW; ++k) {
        if (Sc<S>::is_zero(x.at(i, k))) continue;
        for (int j = 0; j < kDimW; ++j)
          if (!Sc<S>::is_zero(y.at(k, j))) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend Op16 operator+(Op16 x, const Op16& y) {
    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
    return x;
  }
  friend Op16 operator-(Op16 x, const Op16& y) {
    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
    return x;
  }
  friend Op16 operator*(const S& s, Op16 x) {
    for (auto& e : x.a) e = s * e;
    return x;
  }
};

template <class S>
Op16<S> gen_mul(int g) {
  Op16<S> r;
  for (int m = 0; m < kDimW; ++m) {
    int s = left_mul_sign(m, g);
    if (s) r.at(m | (1 << g), m) = Sc<S>::from_int(s);
  }
  return r;
}

template <class S>
Op16<S> gen_der(int g) {
  Op16<S> r;
  for (int m = 0; m < kDimW; ++m) {
    int s = left_der_sign(m, g);
    if (s) r.at(m & ~(1 << g), m) = Sc<S>::from_int(s);
  }
  return r;
}

template <class S>
Op16<S> op16_from(const EndoW& e);
template <>
inline Op16<CQ> op16_from<CQ>(const EndoW& e) {
  Op16<CQ> r;
  r.a = e.a;
  return r;
}
template <>
inline Op16<cd> op16_from<cd>(const EndoW& e) {
  Op16<cd> r;
  for (size_t k = 0; k < e.a.size(); ++k) r.a[k] = e.a[k].to_complex();
  return r;
}

// B(p) generic in the scalar
template <class S>
M2<S> pairing(const typename Sc<S>::Mom& p) {
  const S I = Sc<S>::I();
  S p0 = Sc<S>::comp(p, 0), p1 = Sc<S>::comp(p, 1), p2 = Sc<S>::comp(p, 2), p3 = Sc<S>::comp(p, 3);
  M2<S> B;
  B[0][0] = p0 + p1;
  B[0][1] = p2 - I * p3;
  B[1][0] = p2 + I * p3;
  B[1][1] = p0 - p1;
  return B;
}

// Γ_{ab}(p) = (J B(p) J)_{ab}
template <class S>
M2<S> gamma_low(const typename Sc<S>::Mom& p) {
  M2<S> B = pairing<S>(p), G;
  G[0][0] = -B[1][1];
  G[0][1] = B[1][0];
  G[1][0] = B[0][1];
  G[1][1] = -B[0][0];
  return G;
}

template <class S>
S minkowski2(const typename Sc<S>::Mom& p) {
  S p0 = Sc<S>::comp(p, 0), p1 = Sc<S>::comp(p, 1), p2 = Sc<S>::comp(p, 2), p3 = Sc<S>::comp(p, 3);
  return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3;
}

// W-side operators with generic scalar (mirrors algebra.hpp).
template <class S>
Op16<S> w_int_plus(int a, const M2<S>& B) {
  Op16<S> r;
  for (int c = 1; c <= 2; ++c) r = r + B[a - 1][c - 1] * gen_der<S>(TB1 + c - 1);
  return r;
}
template <class S>
Op16<S> w_int_minus(int a, const M2<S>& B) {
  Op16<S> r;
  for (int c = 1; c <= 2; ++c) r = r + B[c - 1][a - 1] * gen_der<S>(T1 + c - 1);
  return r;
}
template <class S>
Op16<S> w_d(int a, const M2<S>& B) { return gen_mul<S>(T1 + a - 1) + w_int_plus(a, B); }
template <class S>
Op16<S> w_dbar(int a, const M2<S>& B) { return gen_mul<S>(TB1 + a - 1) + w_int_minus(a, B); }

}  // namespace superkit
