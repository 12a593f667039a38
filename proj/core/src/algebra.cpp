#include "superkit/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "superkit/ledger.hpp"
#include "superkit/linalg.hpp"

namespace superkit {

namespace {

int set_bits(const std::string& s, int shift) {
  int bits = 0;
  for (char ch : s) {
    if (ch != '1' && ch != '2') throw std::invalid_argument("bad monomial key: " + s);
    int b = 1 << (ch - '1' + shift);
    if (bits & b) throw std::invalid_argument("repeated index in monomial key: " + s);
    bits |= b;
  }
  return bits;
}

std::string bits_str(int bits) {
  std::string s;
  if (bits & 1) s += '1';
  if (bits & 2) s += '2';
  return s;
}

EndoW from_fn(int (*sign)(int, int), int g) {
  EndoW e;
  for (int m = 0; m < kDimW; ++m) {
    int s = sign(m, g);
    if (s == 0) continue;
    int img = (sign == left_mul_sign) ? (m | (1 << g)) : (m & ~(1 << g));
    e.at(img, m) = CQ(s);
  }
  return e;
}

}  // namespace

Monomial Monomial::from_sets(const std::vector<int>& plus, const std::vector<int>& minus) {
  int m = 0;
  for (int a : plus) {
    if (a != 1 && a != 2) throw std::invalid_argument("index must be 1 or 2");
    m |= 1 << (a - 1);
  }
  for (int a : minus) {
    if (a != 1 && a != 2) throw std::invalid_argument("index must be 1 or 2");
    m |= 1 << (a + 1);
  }
  return Monomial(m);
}

Monomial Monomial::from_key(const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("monomial key needs '|': " + key);
  return Monomial(set_bits(key.substr(0, bar), 0) | set_bits(key.substr(bar + 1), 2));
}

std::string Monomial::key() const { return bits_str(plus_bits()) + "|" + bits_str(minus_bits()); }

std::string Monomial::pretty(const char* plus, const char* minus) const {
  if (mask == 0) return "1";
  std::string s;
  for (int g = 0; g < 4; ++g) {
    if (!(mask & (1 << g))) continue;
    if (!s.empty()) s += "^";
    s += (g < 2 ? plus : minus) + std::to_string(g % 2 + 1);
  }
  return s;
}

int left_mul_sign(int mask, int g) {
  if (mask & (1 << g)) return 0;
  return (__builtin_popcount(mask & ((1 << g) - 1)) & 1) ? -1 : 1;
}

int left_der_sign(int mask, int g) {
  if (!(mask & (1 << g))) return 0;
  return (__builtin_popcount(mask & ((1 << g) - 1)) & 1) ? -1 : 1;
}

bool Multivector::is_zero() const {
  for (auto& x : c) if (!x.is_zero()) return false;
  return true;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int k = 0; k < kDimW; ++k) c[k] += o.c[k];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int k = 0; k < kDimW; ++k) c[k] -= o.c[k];
  return *this;
}

Multivector operator*(const CQ& k, const Multivector& a) {
  Multivector r;
  for (int i = 0; i < kDimW; ++i) r.c[i] = k * a.c[i];
  return r;
}

Multivector Multivector::part(int parity) const {
  Multivector r;
  for (int k = 0; k < kDimW; ++k)
    if (Monomial(k).parity() == parity) r.c[k] = c[k];
  return r;
}

std::string Multivector::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kDimW; ++k) {
    if (c[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c[k].str() << "*" << Monomial(k).pretty();
  }
  if (first) os << "0";
  return os.str();
}

Mat2 mat2_identity() {
  Mat2 m;
  m[0][0] = CQ(1);
  m[1][1] = CQ(1);
  return m;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Mat2 mat2_scale(const CQ& k, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = k * a[i][j];
  return r;
}

CQ mat2_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

EndoW EndoW::identity() {
  EndoW e;
  for (int k = 0; k < kDimW; ++k) e.at(k, k) = CQ(1);
  return e;
}

Multivector EndoW::apply(const Multivector& m) const {
  Multivector r;
  for (int c = 0; c < kDimW; ++c) {
    if (m.c[c].is_zero()) continue;
    for (int row = 0; row < kDimW; ++row) {
      const CQ& x = at(row, c);
      if (!x.is_zero()) r.c[row] += x * m.c[c];
    }
  }
  return r;
}

bool EndoW::is_zero() const {
  for (auto& x : a) if (!x.is_zero()) return false;
  return true;
}

bool EndoW::is_even() const {
  for (int r = 0; r < kDimW; ++r)
    for (int c = 0; c < kDimW; ++c)
      if (Monomial(r).parity() != Monomial(c).parity() && !at(r, c).is_zero()) return false;
  return true;
}

bool EndoW::is_odd() const {
  for (int r = 0; r < kDimW; ++r)
    for (int c = 0; c < kDimW; ++c)
      if (Monomial(r).parity() == Monomial(c).parity() && !at(r, c).is_zero()) return false;
  return true;
}

EndoW& EndoW::operator+=(const EndoW& o) {
  for (size_t k = 0; k < a.size(); ++k)
    if (!o.a[k].is_zero()) a[k] += o.a[k];
  return *this;
}

EndoW& EndoW::operator-=(const EndoW& o) {
  for (size_t k = 0; k < a.size(); ++k)
    if (!o.a[k].is_zero()) a[k] -= o.a[k];
  return *this;
}

EndoW operator*(const EndoW& x, const EndoW& y) {
  EndoW r;
  for (int i = 0; i < kDimW; ++i)
    for (int k = 0; k < kDimW; ++k) {
      const CQ& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < kDimW; ++j) {
        const CQ& ykj = y.at(k, j);
        if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

EndoW operator*(const CQ& k, const EndoW& x) {
  EndoW r;
  if (k.is_zero()) return r;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!x.a[i].is_zero()) r.a[i] = k * x.a[i];
  return r;
}

EndoW graded_bracket(const EndoW& x, int px, const EndoW& y, int py) {
  return (px & py) ? anticommutator(x, y) : commutator(x, y);
}

SymplecticForm SymplecticForm::ledger() {
  SymplecticForm f;
  f.lower[0][1] = CQ(ledger::kEpsLower12);
  f.lower[1][0] = CQ(-ledger::kEpsLower12);
  f.upper[0][1] = CQ(ledger::kEpsUpper12);
  f.upper[1][0] = CQ(-ledger::kEpsUpper12);
  return f;
}

EndoW op_ext_plus(int a) { return from_fn(left_mul_sign, T1 + a - 1); }
EndoW op_ext_minus(int a) { return from_fn(left_mul_sign, TB1 + a - 1); }

EndoW op_int_plus(int a, const PairingMatrix& B) {
  EndoW r;
  for (int c = 1; c <= 2; ++c) r += B[a - 1][c - 1] * from_fn(left_der_sign, TB1 + c - 1);
  return r;
}

EndoW op_int_minus(int a, const PairingMatrix& B) {
  EndoW r;
  for (int c = 1; c <= 2; ++c) r += B[c - 1][a - 1] * from_fn(left_der_sign, T1 + c - 1);
  return r;
}

Multivector ext_plus(int a, const Multivector& m) { return op_ext_plus(a).apply(m); }
Multivector ext_minus(int a, const Multivector& m) { return op_ext_minus(a).apply(m); }
Multivector int_plus(int a, const PairingMatrix& B, const Multivector& m) {
  return op_int_plus(a, B).apply(m);
}
Multivector int_minus(int a, const PairingMatrix& B, const Multivector& m) {
  return op_int_minus(a, B).apply(m);
}

EndoW build_d(int a, const PairingMatrix& B) { return op_ext_plus(a) + op_int_plus(a, B); }
EndoW build_dbar(int a, const PairingMatrix& B) { return op_ext_minus(a) + op_int_minus(a, B); }
EndoW build_q(int a, const PairingMatrix& B) { return op_ext_plus(a) - op_int_plus(a, B); }
EndoW build_qbar(int a, const PairingMatrix& B) { return op_ext_minus(a) - op_int_minus(a, B); }

namespace {

// ε_{ab} x_a y_b
EndoW eps_contract(const SymplecticForm& eps, EndoW (*x)(int), EndoW (*y)(int)) {
  EndoW r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (!eps.lower[a - 1][b - 1].is_zero()) r += eps.lower[a - 1][b - 1] * (x(a) * y(b));
  return r;
}

template <class FX, class FY>
EndoW eps_contract_fn(const SymplecticForm& eps, FX x, FY y) {
  EndoW r;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      if (!eps.lower[a - 1][b - 1].is_zero()) r += eps.lower[a - 1][b - 1] * (x(a) * y(b));
  return r;
}

}  // namespace

EndoW build_e2(const SymplecticForm& eps) { return eps_contract(eps, op_ext_plus, op_ext_plus); }
EndoW build_ebar2(const SymplecticForm& eps) { return eps_contract(eps, op_ext_minus, op_ext_minus); }

EndoW build_i2(const PairingMatrix& B, const SymplecticForm& eps) {
  auto i = [&](int a) { return op_int_plus(a, B); };
  return CQ::frac(-1, 2) * eps_contract_fn(eps, i, i);
}

EndoW build_ibar2(const PairingMatrix& B, const SymplecticForm& eps) {
  auto i = [&](int a) { return op_int_minus(a, B); };
  return CQ::frac(-1, 2) * eps_contract_fn(eps, i, i);
}

EndoW d2_composed(const PairingMatrix& B, const SymplecticForm& eps) {
  auto d = [&](int a) { return build_d(a, B); };
  return CQ(ledger::d2_norm()) * eps_contract_fn(eps, d, d);
}

EndoW dbar2_composed(const PairingMatrix& B, const SymplecticForm& eps) {
  auto d = [&](int a) { return build_dbar(a, B); };
  return CQ(ledger::d2_norm()) * eps_contract_fn(eps, d, d);
}

EndoW d2_expanded(const PairingMatrix& B, const SymplecticForm& eps) {
  auto e = [](int a) { return op_ext_plus(a); };
  auto i = [&](int a) { return op_int_plus(a, B); };
  EndoW cross = eps_contract_fn(eps, e, i);
  return CQ(ledger::d2_norm()) * (build_e2(eps) + CQ(2) * cross - CQ(2) * build_i2(B, eps));
}

EndoW dbar2_expanded(const PairingMatrix& B, const SymplecticForm& eps) {
  auto e = [](int a) { return op_ext_minus(a); };
  auto i = [&](int a) { return op_int_minus(a, B); };
  EndoW cross = eps_contract_fn(eps, e, i);
  return CQ(ledger::d2_norm()) * (build_ebar2(eps) + CQ(2) * cross - CQ(2) * build_ibar2(B, eps));
}

EndoW d2_two_term(const PairingMatrix& B, const SymplecticForm& eps) {
  return CQ(ledger::d2_norm()) * (build_e2(eps) + build_i2(B, eps));
}

EndoW dbar2_two_term(const PairingMatrix& B, const SymplecticForm& eps) {
  return CQ(ledger::d2_norm()) * (build_ebar2(eps) + build_ibar2(B, eps));
}

EndoW build_d2(const PairingMatrix& B, const SymplecticForm& eps) {
  EndoW x = d2_composed(B, eps);
  if (!(x == d2_expanded(B, eps))) throw std::logic_error("d2: construction routes disagree");
  return x;
}

EndoW build_dbar2(const PairingMatrix& B, const SymplecticForm& eps) {
  EndoW x = dbar2_composed(B, eps);
  if (!(x == dbar2_expanded(B, eps))) throw std::logic_error("dbar2: construction routes disagree");
  return x;
}

namespace {
constexpr int kMaskH = 0, kMaskL1 = 4, kMaskL2 = 8, kMaskF = 12;
constexpr int kMaskA11 = 5, kMaskA12 = 9, kMaskA21 = 6, kMaskA22 = 10;
constexpr int kMaskPsi1 = 13, kMaskPsi2 = 14, kMaskTop = 15;

Multivector chiral_signed(const PairingMatrix& B, const ChiralParams& p, int s) {
  Multivector m;
  const CQ S(s);
  m[kMaskH] = S * mat2_det(B) * p.phi;
  m[kMaskL1] = B[0][1] * p.psi1 + B[1][1] * p.psi2;
  m[kMaskL2] = -(B[0][0] * p.psi1) - B[1][0] * p.psi2;
  m[kMaskF] = p.F;
  m[kMaskA11] = -S * B[1][1] * p.phi;
  m[kMaskA12] = S * B[1][0] * p.phi;
  m[kMaskA21] = S * B[0][1] * p.phi;
  m[kMaskA22] = -S * B[0][0] * p.phi;
  m[kMaskPsi1] = p.psi1;
  m[kMaskPsi2] = p.psi2;
  m[kMaskTop] = p.phi;
  return m;
}
}  // namespace

// In the graded product basis H and A_ab carry the opposite sign to the
// printed closed form.
Multivector chiral_element(const PairingMatrix& B, const ChiralParams& p) {
  return chiral_signed(B, p, -1);
}

Multivector chiral_element_as_printed(const PairingMatrix& B, const ChiralParams& p) {
  return chiral_signed(B, p, +1);
}

std::array<Multivector, 4> chiral_kernel(const PairingMatrix& B) {
  return {chiral_element(B, {CQ(1), CQ(0), CQ(0), CQ(0)}),
          chiral_element(B, {CQ(0), CQ(1), CQ(0), CQ(0)}),
          chiral_element(B, {CQ(0), CQ(0), CQ(1), CQ(0)}),
          chiral_element(B, {CQ(0), CQ(0), CQ(0), CQ(1)})};
}

ChiralParams chiral_params_of(const Multivector& m) {
  return {m[kMaskTop], m[kMaskPsi1], m[kMaskPsi2], m[kMaskF]};
}

std::vector<Multivector> chiral_nullspace(const PairingMatrix& B) {
  MatQ sys(2 * kDimW, VecQ(kDimW));
  for (int a = 1; a <= 2; ++a) {
    EndoW d = build_dbar(a, B);
    for (int r = 0; r < kDimW; ++r)
      for (int c = 0; c < kDimW; ++c) sys[(a - 1) * kDimW + r][c] = d.at(r, c);
  }
  std::vector<Multivector> out;
  for (auto& v : nullspace(sys, kDimW)) {
    Multivector m;
    for (int k = 0; k < kDimW; ++k) m[k] = v[k];
    out.push_back(m);
  }
  return out;
}

int swap_sides(int mask) { return ((mask & 3) << 2) | ((mask >> 2) & 3); }

// c(g1 ... gn) = c(gn) ... c(g1) with c(t^a) = tb^a, c(tb^a) = t^a.
int conjugate_w_sign(int mask) {
  Multivector v = Multivector::scalar(CQ(1));
  for (int g = 0; g < 4; ++g)
    if (mask & (1 << g)) v = from_fn(left_mul_sign, (g + 2) % 4).apply(v);
  return v[swap_sides(mask)] == CQ(1) ? 1 : -1;
}

Multivector conjugate_w(const Multivector& m) {
  Multivector r;
  for (int k = 0; k < kDimW; ++k) {
    if (m[k].is_zero()) continue;
    r[swap_sides(k)] = CQ(conjugate_w_sign(k)) * m[k].conj();
  }
  return r;
}

}  // namespace superkit
