#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace superkit {

using Q = mpq_class;

// Complex number with rational real and imaginary parts.
struct CQ {
  Q re{0};
  Q im{0};

  CQ() = default;
  CQ(long r) : re(r) {}
  CQ(const Q& r) : re(r) {}
  CQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  static CQ i() { return CQ(Q(0), Q(1)); }
  static CQ frac(long num, long den) { Q q(num, den); q.canonicalize(); return CQ(q); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  CQ conj() const { return CQ(re, -im); }
  Q norm2() const { return re * re + im * im; }

  CQ operator-() const { return CQ(-re, -im); }
  CQ& operator+=(const CQ& o) { re += o.re; im += o.im; return *this; }
  CQ& operator-=(const CQ& o) { re -= o.re; im -= o.im; return *this; }
  CQ& operator*=(const CQ& o) { *this = *this * o; return *this; }

  friend CQ operator+(CQ a, const CQ& b) { return a += b; }
  friend CQ operator-(CQ a, const CQ& b) { return a -= b; }
  friend CQ operator*(const CQ& a, const CQ& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return CQ(Q(a.re * b.re));
    return CQ(Q(a.re * b.re - a.im * b.im), Q(a.re * b.im + a.im * b.re));
  }
  friend CQ operator/(const CQ& a, const CQ& b) {
    Q n = b.norm2();
    if (sgn(n) == 0) throw std::domain_error("CQ division by zero");
    CQ t = a * b.conj();
    return CQ(Q(t.re / n), Q(t.im / n));
  }
  friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

inline CQ operator*(long k, const CQ& a) { return CQ(k) * a; }

// Closest rational with bounded denominator; used only when parsing decimal input.
Q rational_from_double(double x, long max_den = 1000000);

// Univariate polynomial in an indeterminate (the mass m) with CQ coefficients.
// c[k] is the coefficient of m^k.
struct PolyM {
  std::vector<CQ> c;

  PolyM() = default;
  PolyM(const CQ& a) { if (!a.is_zero()) c.push_back(a); }
  static PolyM m() { PolyM p; p.c = {CQ(0), CQ(1)}; return p; }

  void trim() { while (!c.empty() && c.back().is_zero()) c.pop_back(); }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  CQ coef(int k) const { return k < static_cast<int>(c.size()) ? c[k] : CQ(0); }
  PolyM conj() const { PolyM p; for (auto& x : c) p.c.push_back(x.conj()); return p; }

  friend PolyM operator+(const PolyM& a, const PolyM& b);
  friend PolyM operator-(const PolyM& a, const PolyM& b);
  friend PolyM operator*(const PolyM& a, const PolyM& b);
  friend bool operator==(const PolyM& a, const PolyM& b) { return a.c == b.c; }
  PolyM operator-() const { PolyM p = *this; for (auto& x : p.c) x = -x; return p; }

  // Divide out the leading coefficient and any power of m.
  PolyM normalized() const;
  std::string str(const std::string& var = "m") const;
};

}  // namespace superkit
