#include <cmath>

#include "doctest.h"
#include "superkit/spin_geometry.hpp"
#include "superkit/suites.hpp"

using namespace superkit;

namespace {

MomentumQ mq(long a, long b, long c, long d) { return MomentumQ{{Q(a), Q(b), Q(c), Q(d)}}; }

}  // namespace

TEST_CASE("minkowski_norm2") {
  CHECK(minkowski_norm2(mq(1, 0, 0, 0)) == 1);
  CHECK(minkowski_norm2(mq(3, 1, 2, 2)) == 0);
  CHECK(minkowski_norm2(mq(2, 1, 0, 0)) == 3);
}

TEST_CASE("gamma_pair") {
  auto id = gamma_pair(mq(1, 0, 0, 0));
  CHECK(id == mat2_identity());
  auto e2 = gamma_pair(mq(0, 0, 1, 0));
  CHECK(e2[0][0].is_zero());
  CHECK(e2[0][1] == CQ(1));
  CHECK(e2[1][0] == CQ(1));
  CHECK(e2[1][1].is_zero());
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    MomentumQ p = rng.momentum();
    CHECK(mat2_det(gamma_pair(p)) == CQ(minkowski_norm2(p)));
  }
}

TEST_CASE("rest_boost") {
  const double m = 1.5;
  Momentum rest{{m, 0, 0, 0}};
  CHECK((rest_boost(rest, m) - Mat2d::Identity()).norm() < 1e-12);
  const double eta = 0.8;
  Momentum p{{m * std::cosh(eta), m * std::sinh(eta), 0, 0}};
  Mat2d h = rest_boost(p, m);
  Mat2d expect = Mat2d::Zero();
  expect(0, 0) = std::exp(eta / 2);
  expect(1, 1) = std::exp(-eta / 2);
  CHECK((h - expect).norm() < 1e-12);
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    Momentum q = rng.on_shell_numeric(m);
    Mat2d hq = rest_boost(q, m);
    CHECK((hq * (m * Mat2d::Identity()) * hq.adjoint() - gamma_pair(q)).norm() < 1e-10);
  }
  CHECK_THROWS_AS(rest_boost(Momentum{{2, 0, 0, 0}}, 1.0), OffOrbit);
  CHECK_THROWS_AS(rest_boost(Momentum{{-1, 0, 0, 0}}, 1.0), NonPositiveEnergy);
}

TEST_CASE("spin action") {
  Rng rng(29);
  Multivector v = rng.multivector();
  CHECK((spin_action(Mat2d::Identity(), v) - to_numeric(v)).norm() < 1e-14);
  Mat2d h = rng.spin_element();
  CHECK(std::abs(h.determinant() - cd(1)) < 1e-12);
  VecWd top = spin_action(h, Multivector::basis(3));
  VecWd expect = VecWd::Zero();
  expect(3) = 1;
  CHECK((top - expect).norm() < 1e-12);
  // group homomorphism
  Mat2d g = rng.spin_element();
  CHECK((spin_action_matrix(h * g) - spin_action_matrix(h) * spin_action_matrix(g)).norm() < 1e-10);
}

TEST_CASE("equivariance of the pairing under the spin group") {
  Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    Mat2d h = rng.spin_element();
    Momentum p = Momentum::from(rng.momentum());
    Momentum hp = act_on_momentum(h, p);
    CHECK((gamma_pair(hp) - h * gamma_pair(p) * h.adjoint()).norm() < 1e-10);
    CHECK(std::abs(minkowski_norm2(hp) - minkowski_norm2(p)) < 1e-9 * (1 + std::abs(minkowski_norm2(p))));
  }
}

TEST_CASE("conj_zeta") {
  auto a = conj_zeta({cd(1), cd(0)});
  CHECK(a[0] == cd(0));
  CHECK(a[1] == cd(0, 1));
  auto b = conj_zeta({cd(0), cd(1)});
  CHECK(b[0] == cd(0, -1));
  CHECK(b[1] == cd(0));
  std::array<cd, 2> z{cd(0.3, -1.2), cd(2.0, 0.5)};
  // the printed formula squares to -Id on C²
  auto zz = conj_zeta(conj_zeta(z));
  CHECK(std::abs(zz[0] + z[0]) < 1e-15);
  CHECK(std::abs(zz[1] + z[1]) < 1e-15);
  auto back = conj_zeta_inverse(conj_zeta(z));
  CHECK(std::abs(back[0] - z[0]) < 1e-15);
  CHECK(std::abs(back[1] - z[1]) < 1e-15);
  // c1 is an antilinear involution
  std::array<cd, 4> v{cd(1, 2), cd(-0.5, 0.25), cd(3, -1), cd(0, 0.75)};
  auto vv = conj_c1(conj_c1(v));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(vv[k] - v[k]) < 1e-15);
  std::array<cd, 4> iv;
  for (int k = 0; k < 4; ++k) iv[k] = cd(0, 1) * v[k];
  auto civ = conj_c1(iv), cv = conj_c1(v);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(civ[k] + cd(0, 1) * cv[k]) < 1e-15);
}

TEST_CASE("zeta intertwines the standard action with rho_minus") {
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    Mat2d h = rng.spin_element();
    Eigen::Vector2cd z(cd(rng.uniform(-1, 1), rng.uniform(-1, 1)), cd(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    Eigen::Vector2cd hz = h * z;
    auto lhs = conj_zeta({hz(0), hz(1)});
    auto zz = conj_zeta({z(0), z(1)});
    Eigen::Vector2cd rhs = rho_minus(h) * Eigen::Vector2cd(zz[0], zz[1]);
    CHECK(std::abs(lhs[0] - rhs(0)) < 1e-12);
    CHECK(std::abs(lhs[1] - rhs(1)) < 1e-12);
  }
}

TEST_CASE("classify_orbit") {
  CHECK(classify_orbit(Momentum{{2, 0, 0, 0}}, 0) == OrbitClass::MassivePlus);
  CHECK(classify_orbit(Momentum{{1, 1, 0, 0}}, 0) == OrbitClass::NullPlus);
  CHECK(classify_orbit(Momentum{{0, 1, 0, 0}}, 0) == OrbitClass::ImaginaryMass);
  CHECK(classify_orbit(Momentum{{-2, 0, 0, 0}}, 0) == OrbitClass::MassiveMinus);
  CHECK(classify_orbit(Momentum{{0, 0, 0, 0}}, 0) == OrbitClass::Zero);
}
