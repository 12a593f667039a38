#pragma once

// Momentum-dependent symbols on the mass orbit.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superkit/algebra.hpp"
#include "superkit/exact.hpp"
#include "superkit/spin_geometry.hpp"

namespace superkit {

enum class Chirality { Plus, Minus };

// ---- closed forms, exact in p ---------------------------------------------

EndoW zeta_int(const MomentumQ& p, Chirality side, int a);
EndoW zeta_d(const MomentumQ& p, int a);
EndoW zeta_dbar(const MomentumQ& p, int a);
EndoW zeta_i2(const MomentumQ& p);
EndoW zeta_d2(const MomentumQ& p);
EndoW zeta_dbar2(const MomentumQ& p);

// Same closed forms at floating momenta.
EndoWd zeta_d(const Momentum& p, int a);
EndoWd zeta_dbar(const Momentum& p, int a);
EndoWd zeta_i2(const Momentum& p);
EndoWd zeta_d2(const Momentum& p);
EndoWd zeta_dbar2(const Momentum& p);

// ---- propagation along the orbit ------------------------------------------

// ρ(h_p) u ρ(h_p)^{-1}; u should commute with the little group.
EndoWd propagate(const EndoWd& u, const Momentum& p, double m, double tol = 1e-9);

// d_a and db_a are not separately K-equivariant; their family propagates as
// ζ_{d_s}(p) = ρ(h_p) d_{ρ(h_p)^{-1}s}(m Id) ρ(h_p)^{-1}.
EndoWd propagate_d(const Momentum& p, double m, int a, double tol = 1e-9);
EndoWd propagate_dbar(const Momentum& p, double m, int a, double tol = 1e-9);

// ---- Dirac symbol -----------------------------------------------------------

using Mat4d = Eigen::Matrix4cd;

// γ(p) = [[0, B(p)], [adj B(p), 0]], γ(p)² = ‖p‖² Id
Mat4d gamma_dirac(const Momentum& p);
// Spin action on Dirac spinors, diag(h, h^{-†}).
Mat4d rho_dirac(const Mat2d& h);
Mat4d dirac_symbol(const Momentum& p, double m);
Mat4d propagate_dirac(const Mat4d& u, const Momentum& p, double m, double tol = 1e-9);
int numeric_kernel_dim(const Eigen::MatrixXcd& a, double tol = 1e-9);

// ---- divergence symbol on symmetric powers --------------------------------

struct DegenerateOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Spins are passed doubled: two_alpha = 2α.
// Basis of Sym^{2α}S₊*⊗Sym^{2β}S₋*: (t1)^{2α-k}(t2)^k ⊗ (tb1)^{2β-l}(tb2)^l at index k*(2β+1)+l.
int sym_tensor_dim(int two_alpha, int two_beta);
Eigen::MatrixXcd divergence_symbol(int two_alpha, int two_beta, const Momentum& p);

// ---- multiplicity -----------------------------------------------------------

int multiplicity(int two_sigma, int two_alpha, int two_beta);

// ---- superspin-0 constraints ----------------------------------------------

// f(p) = chiral element with parameters x = (φ, ψ1, ψ2, F) at p, f(-p) with
// parameters y at -p.  The condition ζ_{d²}(p) f(p) = m conj_w(f(-p)) together
// with its partner at -p is linear in (x, conj y).  Barred quantities below are
// conj(y): the conjugate is paired across the two frequency sectors.
struct LinearRelation {
  std::vector<PolyM> coeffs;  // against the unknowns (φ, ψ1, ψ2, F, φb, ψb1, ψb2, Fb)
  std::string str() const;
};

struct Superspin0Report {
  std::vector<LinearRelation> bosonic;     // independent relations among φ, F, φb, Fb
  std::vector<LinearRelation> fermionic;   // independent relations among ψ, ψb
  PolyM phi_factor;                        // eliminant on φ, normalized
  PolyM fermion_determinant;               // det of the reduced ψ system, normalized
  Q norm2;                                 // ‖p‖²
  bool phi_factor_is_mass_shell = false;   // phi_factor == m² - ‖p‖²
  // At the supplied mass: ψb = R ψ and F = s m φb.
  std::optional<std::array<std::array<CQ, 2>, 2>> psibar_of_psi;
  std::optional<CQ> F_over_m_phibar;
  int complex_solution_dim = 0;            // over both sectors at the supplied mass
  int bosonic_solution_dim = 0;
  int fermionic_solution_dim = 0;
};

Superspin0Report superspin0_constraints(const MomentumQ& p, const Q& m);

}  // namespace superkit
