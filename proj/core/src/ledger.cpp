#include "superkit/ledger.hpp"

namespace superkit::ledger {

Snapshot snapshot() {
  return {
      {"monomial_order", "t1 < t2 < tb1 < tb2, basis index = bitmask, Koszul signs"},
      {"eps", "eps_12 = +1, eps^12 = +1"},
      {"d2_norm", "d2 = kappa eps_ab d_a d_b, D2 = kappa eps^ab D_a D_b, kappa = " + d2_norm().get_str()},
      {"i2", "i2 = -1/2 eps_ab i_a i_b, i2(tb1 tb2) = det B"},
      {"gamma_lowering", kGammaLowering},
      {"momentum_operator", "P_mu = -i d/dx^mu, plane wave exp(i<k,x>)"},
      {"rho_plus", "h^{-T}"},
      {"rho_minus", "(h^dagger)^{-1}"},
      {"rest_boost", "Hermitian positive square root of B(p)/m"},
      {"berezin", "int theta1 theta2 thetab1 thetab2 = 1"},
      {"conjugation", "antilinear anti-automorphism theta^a <-> thetab^a, k -> -k"},
      {"chiral_expansion", "f = exp(Gamma_ab(k) theta^a thetab^b) (phi + theta^a psi_a + theta1 theta2 F)"},
      {"spinor_raising", "v^b = v_c eps^{cb}"},
      {"aux_coefficients", "Lambda_N monomial xi_I enters with phase i^(r(r-1)/2 + [r odd]), r = |I|, so that it is real"},
      {"wz_components", "(box + m^2) phi = 0, i Gamma^mu_ab d_mu conj(psi)^b + m psi_a = 0, F = -2 m conj(phi)"},
  };
}

}  // namespace superkit::ledger
