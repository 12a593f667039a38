#pragma once

// The 16-dimensional module W = Λ(S+*) ⊗ Λ(S-*) with exact coefficients.
//
// Generators are ordered t1 < t2 < tb1 < tb2 (tb = tau-bar).  A monomial is a
// bitmask: bit 0 = t1, bit 1 = t2, bit 2 = tb1, bit 3 = tb2, and stands for
// the ordered product of its generators.  The basis index of a monomial is its
// mask, so the fixed order is 1, t1, t2, t1t2, tb1, t1tb1, ... , t1t2tb1tb2.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "superkit/exact.hpp"

namespace superkit {

inline constexpr int kDimW = 16;

enum Gen : int { T1 = 0, T2 = 1, TB1 = 2, TB2 = 3 };

struct Monomial {
  std::uint8_t mask = 0;

  constexpr Monomial() = default;
  constexpr explicit Monomial(int m) : mask(static_cast<std::uint8_t>(m)) {}
  static Monomial from_sets(const std::vector<int>& plus, const std::vector<int>& minus);
  // "<I>|<J>", e.g. "12|1"; throws on malformed input
  static Monomial from_key(const std::string& key);

  int plus_bits() const { return mask & 3; }
  int minus_bits() const { return (mask >> 2) & 3; }
  int plus_degree() const { return __builtin_popcount(plus_bits()); }
  int minus_degree() const { return __builtin_popcount(minus_bits()); }
  int degree() const { return __builtin_popcount(mask); }
  int parity() const { return degree() & 1; }
  std::string key() const;
  std::string pretty(const char* plus = "t", const char* minus = "tb") const;
  friend bool operator==(Monomial a, Monomial b) { return a.mask == b.mask; }
};

// Sign of g ∧ (monomial): 0 if g already present.
int left_mul_sign(int mask, int g);
// Sign of the left derivative ∂/∂g on the monomial: 0 if g absent.
int left_der_sign(int mask, int g);

struct Multivector {
  std::array<CQ, kDimW> c{};

  static Multivector basis(int mask) { Multivector m; m.c[mask] = CQ(1); return m; }
  static Multivector scalar(const CQ& x) { Multivector m; m.c[0] = x; return m; }
  CQ& operator[](int k) { return c[k]; }
  const CQ& operator[](int k) const { return c[k]; }

  bool is_zero() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const CQ& k, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.c == b.c; }
  // Even/odd projection.
  Multivector part(int parity) const;
  std::string str() const;
};

using Mat2 = std::array<std::array<CQ, 2>, 2>;
using PairingMatrix = Mat2;

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_scale(const CQ& k, const Mat2& a);
CQ mat2_det(const Mat2& a);

struct EndoW {
  std::array<CQ, kDimW * kDimW> a{};  // a[r*16+c]: component r of the image of basis c

  static EndoW identity();
  CQ& at(int r, int c) { return a[r * kDimW + c]; }
  const CQ& at(int r, int c) const { return a[r * kDimW + c]; }

  Multivector apply(const Multivector& m) const;
  bool is_zero() const;
  bool is_even() const;  // zero on parity-changing positions
  bool is_odd() const;   // zero on parity-preserving positions

  EndoW& operator+=(const EndoW& o);
  EndoW& operator-=(const EndoW& o);
  friend EndoW operator+(EndoW x, const EndoW& y) { return x += y; }
  friend EndoW operator-(EndoW x, const EndoW& y) { return x -= y; }
  friend EndoW operator*(const EndoW& x, const EndoW& y);
  friend EndoW operator*(const CQ& k, const EndoW& x);
  friend bool operator==(const EndoW& x, const EndoW& y) { return x.a == y.a; }
};

// [x,y] = xy - (-1)^{|x||y|} yx, parities given explicitly.
EndoW graded_bracket(const EndoW& x, int px, const EndoW& y, int py);
inline EndoW anticommutator(const EndoW& x, const EndoW& y) { return x * y + y * x; }
inline EndoW commutator(const EndoW& x, const EndoW& y) { return x * y - y * x; }

// eps_lower[a][b] = ε_{ab}, eps_upper[a][b] = ε^{ab}.
struct SymplecticForm {
  Mat2 lower;
  Mat2 upper;
  static SymplecticForm ledger();  // the convention in force, see ledger.hpp
};

// Primitive operators.  int_plus uses B[a][c] against tb^c, int_minus uses
// B[c][a] against t^c.
EndoW op_ext_plus(int a);
EndoW op_ext_minus(int a);
EndoW op_int_plus(int a, const PairingMatrix& B);
EndoW op_int_minus(int a, const PairingMatrix& B);

Multivector ext_plus(int a, const Multivector& m);
Multivector ext_minus(int a, const Multivector& m);
Multivector int_plus(int a, const PairingMatrix& B, const Multivector& m);
Multivector int_minus(int a, const PairingMatrix& B, const Multivector& m);

EndoW build_d(int a, const PairingMatrix& B);
EndoW build_dbar(int a, const PairingMatrix& B);
EndoW build_q(int a, const PairingMatrix& B);
EndoW build_qbar(int a, const PairingMatrix& B);

// e² = ε_{ab} e_a e_b on the plus factor; i² = -½ ε_{ab} i_a i_b (so that
// i²(tb1 tb2) = det B).  Barred versions act on the opposite factors.
EndoW build_e2(const SymplecticForm& eps);
EndoW build_i2(const PairingMatrix& B, const SymplecticForm& eps);
EndoW build_ebar2(const SymplecticForm& eps);
EndoW build_ibar2(const PairingMatrix& B, const SymplecticForm& eps);

// d² = κ ε_{ab} d_a d_b (κ from the ledger).  Both routes are computed and
// compared: the composition and the expanded form κ(e² + 2ε_{ab} e_a i_b - 2 i²).
// Throws std::logic_error if they disagree.
EndoW build_d2(const PairingMatrix& B, const SymplecticForm& eps);
EndoW build_dbar2(const PairingMatrix& B, const SymplecticForm& eps);
EndoW d2_composed(const PairingMatrix& B, const SymplecticForm& eps);
EndoW d2_expanded(const PairingMatrix& B, const SymplecticForm& eps);
EndoW dbar2_composed(const PairingMatrix& B, const SymplecticForm& eps);
EndoW dbar2_expanded(const PairingMatrix& B, const SymplecticForm& eps);
// The two-term form κ(e² + i²), kept for comparison with the composition.
EndoW d2_two_term(const PairingMatrix& B, const SymplecticForm& eps);
EndoW dbar2_two_term(const PairingMatrix& B, const SymplecticForm& eps);

struct ChiralParams {
  CQ phi, psi1, psi2, F;
};

// Element of the chiral subspace in closed form (ledger signs).
Multivector chiral_element(const PairingMatrix& B, const ChiralParams& p);
// Basis indexed by (phi, psi1, psi2, F).
std::array<Multivector, 4> chiral_kernel(const PairingMatrix& B);
// The same closed form with the signs exactly as printed in the source text.
Multivector chiral_element_as_printed(const PairingMatrix& B, const ChiralParams& p);
// Null space of the stacked dbar_1, dbar_2 system by exact elimination.
std::vector<Multivector> chiral_nullspace(const PairingMatrix& B);
// Reads (phi, psi1, psi2, F) back from a chiral element.
ChiralParams chiral_params_of(const Multivector& m);

// Antilinear anti-automorphism exchanging t^a and tb^a: c(xy) = c(y) c(x).
// It is the image of superfunction conjugation under the Hodge star, and
// carries f(-p) to the conjugate paired with f(p).
Multivector conjugate_w(const Multivector& m);
int conjugate_w_sign(int mask);
int swap_sides(int mask);

}  // namespace superkit
