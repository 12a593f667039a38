#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "superkit/algebra.hpp"

namespace superkit {

using cd = std::complex<double>;
using Mat2d = Eigen::Matrix2cd;
using EndoWd = Eigen::Matrix<cd, kDimW, kDimW>;
using VecWd = Eigen::Matrix<cd, kDimW, 1>;

// Covector components in the orthonormal coframe, signature (+,-,-,-).
struct MomentumQ {
  std::array<Q, 4> p{};
};

struct Momentum {
  std::array<double, 4> p{};
  static Momentum from(const MomentumQ& q);
};

Q minkowski_norm2(const MomentumQ& p);
double minkowski_norm2(const Momentum& p);

// B(p) = [[p0+p1, p2-i p3], [p2+i p3, p0-p1]]
PairingMatrix gamma_pair(const MomentumQ& p);
Mat2d gamma_pair(const Momentum& p);
// Inverse of gamma_pair on Hermitian matrices.
Momentum momentum_of_pairing(const Mat2d& B);

struct OffOrbit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPositiveEnergy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hermitian positive h with B(p) = h (m Id) h^dagger.
Mat2d rest_boost(const Momentum& p, double m, double tol = 1e-9);

// Spin element acting on momenta: B(h.p) = h B(p) h^dagger.
Momentum act_on_momentum(const Mat2d& h, const Momentum& p);

// Matrices of the induced actions on the generators (column a = image of t^a).
// rho_plus(h) = h^{-T}, rho_minus(h) = (h^dagger)^{-1}.
Mat2d rho_plus(const Mat2d& h);
Mat2d rho_minus(const Mat2d& h);

// Algebra automorphism of W induced by rho_plus ⊕ rho_minus.
EndoWd spin_action_matrix(const Mat2d& h);
VecWd spin_action(const Mat2d& h, const VecWd& m);
VecWd spin_action(const Mat2d& h, const Multivector& m);

EndoWd to_numeric(const EndoW& e);
VecWd to_numeric(const Multivector& m);
Mat2d to_numeric(const Mat2& m);

// zeta(z1, z2) = (-i conj(z2), i conj(z1)).  As a map C² -> C² it squares to -Id.
std::array<cd, 2> conj_zeta(const std::array<cd, 2>& z);
std::array<cd, 2> conj_zeta_inverse(const std::array<cd, 2>& z);
// c1(z1..z4) = (zeta^-1(z3, z4), zeta(z1, z2)), an antilinear involution of S_C*.
std::array<cd, 4> conj_c1(const std::array<cd, 4>& z);

enum class OrbitClass { MassivePlus, MassiveMinus, NullPlus, NullMinus, Zero, ImaginaryMass };
OrbitClass classify_orbit(const Momentum& p, double tol);
std::string to_string(OrbitClass c);

// SL(2,C) element exp(X) for a traceless X; convenient random generator.
Mat2d sl2_exp(const Mat2d& X);

}  // namespace superkit
