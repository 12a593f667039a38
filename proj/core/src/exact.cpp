#include "superkit/exact.hpp"

#include <cmath>
#include <sstream>

namespace superkit {

std::string CQ::str() const {
  std::ostringstream os;
  if (sgn(im) == 0) {
    os << re;
  } else if (sgn(re) == 0) {
    os << im << "i";
  } else {
    os << "(" << re << (sgn(im) > 0 ? "+" : "") << im << "i)";
  }
  return os.str();
}

Q rational_from_double(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite number");
  // continued fraction convergents
  long sign = x < 0 ? -1 : 1;
  double v = std::fabs(x);
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(v);
    mpz_class ai = static_cast<long>(a);
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = v - a;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  Q q(h1 * sign, k1);
  q.canonicalize();
  return q;
}

PolyM operator+(const PolyM& a, const PolyM& b) {
  PolyM r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n);
  for (size_t k = 0; k < n; ++k) r.c[k] = a.coef(k) + b.coef(k);
  r.trim();
  return r;
}

PolyM operator-(const PolyM& a, const PolyM& b) { return a + (-b); }

PolyM operator*(const PolyM& a, const PolyM& b) {
  PolyM r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, CQ(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

PolyM PolyM::normalized() const {
  PolyM r = *this;
  r.trim();
  if (r.is_zero()) return r;
  size_t lo = 0;
  while (r.c[lo].is_zero()) ++lo;
  r.c.erase(r.c.begin(), r.c.begin() + lo);
  CQ lead = r.c.back();
  for (auto& x : r.c) x = x / lead;
  return r;
}

std::string PolyM::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c[k].str();
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace superkit
