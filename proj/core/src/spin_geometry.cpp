#include "superkit/spin_geometry.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace superkit {

Momentum Momentum::from(const MomentumQ& q) {
  Momentum m;
  for (int k = 0; k < 4; ++k) m.p[k] = q.p[k].get_d();
  return m;
}

Q minkowski_norm2(const MomentumQ& q) {
  const auto& p = q.p;
  return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

double minkowski_norm2(const Momentum& q) {
  const auto& p = q.p;
  return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

PairingMatrix gamma_pair(const MomentumQ& q) {
  const auto& p = q.p;
  PairingMatrix B;
  B[0][0] = CQ(Q(p[0] + p[1]));
  B[0][1] = CQ(p[2], Q(-p[3]));
  B[1][0] = CQ(p[2], p[3]);
  B[1][1] = CQ(Q(p[0] - p[1]));
  return B;
}

Mat2d gamma_pair(const Momentum& q) {
  const auto& p = q.p;
  Mat2d B;
  B << cd(p[0] + p[1], 0), cd(p[2], -p[3]), cd(p[2], p[3]), cd(p[0] - p[1], 0);
  return B;
}

Momentum momentum_of_pairing(const Mat2d& B) {
  Momentum m;
  m.p[0] = 0.5 * (B(0, 0).real() + B(1, 1).real());
  m.p[1] = 0.5 * (B(0, 0).real() - B(1, 1).real());
  m.p[2] = 0.5 * (B(0, 1).real() + B(1, 0).real());
  m.p[3] = 0.5 * (B(1, 0).imag() - B(0, 1).imag());
  return m;
}

Mat2d rest_boost(const Momentum& p, double m, double tol) {
  if (!(m > 0)) throw std::invalid_argument("mass must be positive");
  double n2 = minkowski_norm2(p);
  if (std::fabs(n2 - m * m) > tol * m * m)
    throw OffOrbit("momentum not on the mass shell: |p|^2=" + std::to_string(n2) +
                   ", m^2=" + std::to_string(m * m));
  if (p.p[0] <= 0) throw NonPositiveEnergy("p0 must be positive");
  // principal square root of the positive Hermitian unimodular matrix M = B/m:
  // sqrt(M) = (M + Id) / sqrt(tr M + 2)
  Mat2d M = gamma_pair(p) / m;
  double t = M.trace().real();
  return (M + Mat2d::Identity()) / std::sqrt(t + 2.0);
}

Momentum act_on_momentum(const Mat2d& h, const Momentum& p) {
  return momentum_of_pairing(h * gamma_pair(p) * h.adjoint());
}

Mat2d rho_plus(const Mat2d& h) { return h.inverse().transpose(); }
Mat2d rho_minus(const Mat2d& h) { return h.adjoint().inverse(); }

namespace {

// left multiplication on W by the odd element sum_g v[g] * gen_g
EndoWd left_mul_numeric(const std::array<cd, 4>& v) {
  EndoWd L = EndoWd::Zero();
  for (int g = 0; g < 4; ++g) {
    if (v[g] == cd(0)) continue;
    for (int m = 0; m < kDimW; ++m) {
      int s = left_mul_sign(m, g);
      if (s != 0) L(m | (1 << g), m) += v[g] * double(s);
    }
  }
  return L;
}

}  // namespace

EndoWd spin_action_matrix(const Mat2d& h) {
  Mat2d P = rho_plus(h), N = rho_minus(h);
  std::array<EndoWd, 4> L;
  for (int a = 0; a < 2; ++a) {
    std::array<cd, 4> vp{}, vm{};
    for (int c = 0; c < 2; ++c) {
      vp[c] = P(c, a);
      vm[2 + c] = N(c, a);
    }
    L[a] = left_mul_numeric(vp);
    L[2 + a] = left_mul_numeric(vm);
  }
  EndoWd R = EndoWd::Zero();
  for (int m = 0; m < kDimW; ++m) {
    VecWd v = VecWd::Zero();
    v(0) = 1;
    // the monomial is g_1 g_2 ... in increasing order: apply the last one first
    for (int g = 3; g >= 0; --g)
      if (m & (1 << g)) v = L[g] * v;
    R.col(m) = v;
  }
  return R;
}

VecWd spin_action(const Mat2d& h, const VecWd& m) { return spin_action_matrix(h) * m; }

EndoWd to_numeric(const EndoW& e) {
  EndoWd r;
  for (int i = 0; i < kDimW; ++i)
    for (int j = 0; j < kDimW; ++j) r(i, j) = e.at(i, j).to_complex();
  return r;
}

VecWd to_numeric(const Multivector& m) {
  VecWd r;
  for (int i = 0; i < kDimW; ++i) r(i) = m[i].to_complex();
  return r;
}

Mat2d to_numeric(const Mat2& m) {
  Mat2d r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m[i][j].to_complex();
  return r;
}

VecWd spin_action(const Mat2d& h, const Multivector& m) {
  return spin_action_matrix(h) * to_numeric(m);
}

std::array<cd, 2> conj_zeta(const std::array<cd, 2>& z) {
  const cd I(0, 1);
  return {-I * std::conj(z[1]), I * std::conj(z[0])};
}

std::array<cd, 2> conj_zeta_inverse(const std::array<cd, 2>& z) {
  auto w = conj_zeta(z);
  return {-w[0], -w[1]};
}

std::array<cd, 4> conj_c1(const std::array<cd, 4>& z) {
  auto a = conj_zeta_inverse({z[2], z[3]});
  auto b = conj_zeta({z[0], z[1]});
  return {a[0], a[1], b[0], b[1]};
}

OrbitClass classify_orbit(const Momentum& p, double tol) {
  double n2 = minkowski_norm2(p);
  double scale = 0;
  for (double x : p.p) scale = std::max(scale, std::fabs(x));
  double band = tol * std::max(1.0, scale * scale);
  if (scale <= tol) return OrbitClass::Zero;
  if (n2 > band) return p.p[0] > 0 ? OrbitClass::MassivePlus : OrbitClass::MassiveMinus;
  if (n2 < -band) return OrbitClass::ImaginaryMass;
  return p.p[0] > 0 ? OrbitClass::NullPlus : OrbitClass::NullMinus;
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::MassivePlus: return "MassivePlus";
    case OrbitClass::MassiveMinus: return "MassiveMinus";
    case OrbitClass::NullPlus: return "NullPlus";
    case OrbitClass::NullMinus: return "NullMinus";
    case OrbitClass::Zero: return "Zero";
    case OrbitClass::ImaginaryMass: return "ImaginaryMass";
  }
  return "?";
}

Mat2d sl2_exp(const Mat2d& X) {
  Mat2d Y = X - (X.trace() / 2.0) * Mat2d::Identity();
  return Y.exp();
}

}  // namespace superkit
