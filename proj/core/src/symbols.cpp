#include "superkit/symbols.hpp"

#include <sstream>

#include "superkit/generic.hpp"
#include "superkit/ledger.hpp"
#include "superkit/linalg.hpp"

namespace superkit {

namespace {

EndoWd op_to_eigen(const Op16<cd>& op) {
  EndoWd r;
  for (int i = 0; i < kDimW; ++i)
    for (int j = 0; j < kDimW; ++j) r(i, j) = op.at(i, j);
  return r;
}

EndoWd lift_numeric(const Mat2d& B, bool plus, int a) {
  M2<cd> b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b[i][j] = B(i, j);
  return op_to_eigen(plus ? w_d<cd>(a, b) : w_dbar<cd>(a, b));
}

EndoWd eps_square(const EndoWd& x1, const EndoWd& x2) {
  const double e = ledger::kEpsLower12;
  return ledger::d2_norm().get_d() * e * (x1 * x2 - x2 * x1);
}

}  // namespace

EndoW zeta_int(const MomentumQ& p, Chirality side, int a) {
  PairingMatrix B = gamma_pair(p);
  return side == Chirality::Plus ? op_int_plus(a, B) : op_int_minus(a, B);
}
EndoW zeta_d(const MomentumQ& p, int a) { return build_d(a, gamma_pair(p)); }
EndoW zeta_dbar(const MomentumQ& p, int a) { return build_dbar(a, gamma_pair(p)); }
EndoW zeta_i2(const MomentumQ& p) { return build_i2(gamma_pair(p), SymplecticForm::ledger()); }
EndoW zeta_d2(const MomentumQ& p) { return build_d2(gamma_pair(p), SymplecticForm::ledger()); }
EndoW zeta_dbar2(const MomentumQ& p) { return build_dbar2(gamma_pair(p), SymplecticForm::ledger()); }

EndoWd zeta_d(const Momentum& p, int a) { return lift_numeric(gamma_pair(p), true, a); }
EndoWd zeta_dbar(const Momentum& p, int a) { return lift_numeric(gamma_pair(p), false, a); }
EndoWd zeta_d2(const Momentum& p) { return eps_square(zeta_d(p, 1), zeta_d(p, 2)); }
EndoWd zeta_dbar2(const Momentum& p) { return eps_square(zeta_dbar(p, 1), zeta_dbar(p, 2)); }
EndoWd zeta_i2(const Momentum& p) {
  Mat2d B = gamma_pair(p);
  M2<cd> b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b[i][j] = B(i, j);
  EndoWd i1 = op_to_eigen(w_int_plus<cd>(1, b)), i2 = op_to_eigen(w_int_plus<cd>(2, b));
  return -0.5 * double(ledger::kEpsLower12) * (i1 * i2 - i2 * i1);
}

EndoWd propagate(const EndoWd& u, const Momentum& p, double m, double tol) {
  Mat2d h = rest_boost(p, m, tol);
  EndoWd R = spin_action_matrix(h);
  return R * u * R.inverse();
}

namespace {

EndoWd propagate_family(const Momentum& p, double m, int a, bool plus, double tol) {
  Mat2d h = rest_boost(p, m, tol);
  EndoWd R = spin_action_matrix(h);
  Mat2d P = plus ? rho_plus(h.inverse()) : rho_minus(h.inverse());
  Mat2d rest = m * Mat2d::Identity();
  EndoWd u = EndoWd::Zero();
  for (int c = 1; c <= 2; ++c) u += P(c - 1, a - 1) * lift_numeric(rest, plus, c);
  return R * u * R.inverse();
}

}  // namespace

EndoWd propagate_d(const Momentum& p, double m, int a, double tol) {
  return propagate_family(p, m, a, true, tol);
}
EndoWd propagate_dbar(const Momentum& p, double m, int a, double tol) {
  return propagate_family(p, m, a, false, tol);
}

// ---- Dirac ----------------------------------------------------------------

Mat4d gamma_dirac(const Momentum& p) {
  Mat2d B = gamma_pair(p);
  Mat2d adj;
  adj << B(1, 1), -B(0, 1), -B(1, 0), B(0, 0);
  Mat4d g = Mat4d::Zero();
  g.block<2, 2>(0, 2) = B;
  g.block<2, 2>(2, 0) = adj;
  return g;
}

Mat4d rho_dirac(const Mat2d& h) {
  Mat4d r = Mat4d::Zero();
  r.block<2, 2>(0, 0) = h;
  r.block<2, 2>(2, 2) = h.adjoint().inverse();
  return r;
}

Mat4d dirac_symbol(const Momentum& p, double m) {
  if (!(m > 0)) throw std::invalid_argument("mass must be positive");
  return gamma_dirac(p) / m - Mat4d::Identity();
}

Mat4d propagate_dirac(const Mat4d& u, const Momentum& p, double m, double tol) {
  Mat4d r = rho_dirac(rest_boost(p, m, tol));
  return r * u * r.inverse();
}

int numeric_kernel_dim(const Eigen::MatrixXcd& a, double tol) {
  if (a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > tol * scale) ++rank;
  return static_cast<int>(a.cols()) - rank;
}

// ---- divergence symbol ------------------------------------------------------

int sym_tensor_dim(int two_alpha, int two_beta) { return (two_alpha + 1) * (two_beta + 1); }

Eigen::MatrixXcd divergence_symbol(int two_alpha, int two_beta, const Momentum& p) {
  if (two_alpha <= 0 || two_beta <= 0) throw DegenerateOrder("divergence symbol needs alpha, beta > 0");
  const int na = two_alpha, nb = two_beta;
  Mat2d B = gamma_pair(p);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(sym_tensor_dim(na - 1, nb - 1), sym_tensor_dim(na, nb));
  // polarization: x^{n-k} y^k -> ((n-k)/n) t1 ⊗ x^{n-k-1} y^k + (k/n) t2 ⊗ x^{n-k} y^{k-1}
  for (int k = 0; k <= na; ++k)
    for (int l = 0; l <= nb; ++l) {
      const int col = k * (nb + 1) + l;
      for (int c = 0; c < 2; ++c) {
        const int kk = k - c;
        const double wc = c == 0 ? double(na - k) / na : double(k) / na;
        if (kk < 0 || kk > na - 1 || wc == 0) continue;
        for (int d = 0; d < 2; ++d) {
          const int ll = l - d;
          const double wd = d == 0 ? double(nb - l) / nb : double(l) / nb;
          if (ll < 0 || ll > nb - 1 || wd == 0) continue;
          M(kk * nb + ll, col) += wc * wd * B(c, d);
        }
      }
    }
  return M;
}

int multiplicity(int two_sigma, int two_alpha, int two_beta) {
  if (two_sigma < 0 || two_alpha < 0 || two_beta < 0) return 0;
  const int lo = std::abs(two_alpha - two_beta), hi = two_alpha + two_beta;
  if (two_sigma < lo || two_sigma > hi) return 0;
  return (hi - two_sigma) % 2 == 0 ? 1 : 0;
}

// ---- superspin 0 ---------------------------------------------------------------

namespace {

using PolyRow = std::vector<PolyM>;

PolyM poly_rem(PolyM a, const PolyM& b) {
  a.trim();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    CQ f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int k = 0; k <= b.degree(); ++k) a.c[k + shift] -= f * b.c[k];
    a.trim();
  }
  return a;
}

PolyM poly_gcd(PolyM a, PolyM b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    PolyM r = poly_rem(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  CQ lead = a.c.back();
  for (auto& x : a.c) x = x / lead;
  return a;
}

// Fraction-free elimination of the listed columns; returns the rows that no
// longer involve them.
std::vector<PolyRow> eliminate(std::vector<PolyRow> rows, const std::vector<int>& cols) {
  for (int c : cols) {
    int piv = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      rows[r][c].trim();
      if (rows[r][c].is_zero()) continue;
      if (piv < 0 || rows[r][c].degree() < rows[piv][c].degree()) piv = static_cast<int>(r);
    }
    if (piv < 0) continue;
    PolyRow p = rows[piv];
    rows.erase(rows.begin() + piv);
    for (auto& row : rows) {
      if (row[c].is_zero()) continue;
      PolyM f = row[c];
      for (size_t k = 0; k < row.size(); ++k) row[k] = p[c] * row[k] - f * p[k];
      row[c] = PolyM();
    }
  }
  std::vector<PolyRow> out;
  for (auto& row : rows) {
    bool nz = false;
    for (auto& x : row) {
      x.trim();
      if (!x.is_zero()) nz = true;
    }
    if (nz) out.push_back(row);
  }
  return out;
}

const char* kUnknowns[8] = {"phi", "psi1", "psi2", "F", "phib", "psib1", "psib2", "Fb"};

ChiralParams unit_params(int j) {
  ChiralParams c{CQ(0), CQ(0), CQ(0), CQ(0)};
  if (j == 0) c.phi = CQ(1);
  if (j == 1) c.psi1 = CQ(1);
  if (j == 2) c.psi2 = CQ(1);
  if (j == 3) c.F = CQ(1);
  return c;
}

PairingMatrix neg(const PairingMatrix& B) { return mat2_scale(CQ(-1), B); }

MomentumQ neg(const MomentumQ& p) {
  MomentumQ r;
  for (int k = 0; k < 4; ++k) r.p[k] = -p.p[k];
  return r;
}

// 32 relations, linear in (x, conj y), coefficients of degree ≤ 1 in m.
std::vector<PolyRow> superspin0_rows(const MomentumQ& p) {
  const PairingMatrix B = gamma_pair(p), Bm = neg(B);
  const EndoW Zp = zeta_d2(p), Zm = zeta_d2(neg(p));
  std::vector<PolyRow> rows(2 * kDimW, PolyRow(8));
  const PolyM m = PolyM::m();
  for (int j = 0; j < 4; ++j) {
    Multivector ex = chiral_element(B, unit_params(j)), ey = chiral_element(Bm, unit_params(j));
    Multivector zx = Zp.apply(ex), cy = conjugate_w(ey);
    Multivector zy = Zm.apply(ey), cx = conjugate_w(ex);
    for (int i = 0; i < kDimW; ++i) {
      // ζ(p) f(p) - m conj_w(f(-p)) = 0
      rows[i][j] = rows[i][j] + PolyM(zx[i]);
      rows[i][4 + j] = rows[i][4 + j] - m * PolyM(cy[i]);
      // conj of: ζ(-p) f(-p) - m conj_w(f(p)) = 0
      rows[kDimW + i][4 + j] = rows[kDimW + i][4 + j] + PolyM(zy[i].conj());
      rows[kDimW + i][j] = rows[kDimW + i][j] - m * PolyM(cx[i].conj());
    }
  }
  return rows;
}

bool touches(const PolyRow& r, std::initializer_list<int> cols) {
  for (int c : cols) {
    PolyM x = r[c];
    x.trim();
    if (!x.is_zero()) return true;
  }
  return false;
}

CQ eval(const PolyM& p, const Q& m) {
  CQ r(0), mk(1);
  for (auto& c : p.c) {
    r += c * mk;
    mk = mk * CQ(m);
  }
  return r;
}

MatQ evaluate(const std::vector<PolyRow>& rows, const Q& m, const std::vector<int>& cols) {
  MatQ a;
  for (auto& r : rows) {
    VecQ v;
    for (int c : cols) v.push_back(eval(r[c], m));
    a.push_back(v);
  }
  return a;
}

std::vector<LinearRelation> independent(const std::vector<PolyRow>& rows) {
  // independence judged at a generic mass value
  std::vector<LinearRelation> out;
  MatQ acc;
  const Q probe(7, 3);
  for (auto& r : rows) {
    VecQ v;
    for (auto& x : r) v.push_back(eval(x, probe));
    MatQ t = acc;
    t.push_back(v);
    if (rank(t) > static_cast<int>(acc.size())) {
      acc.push_back(v);
      out.push_back({r});
    }
  }
  return out;
}

}  // namespace

std::string LinearRelation::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    PolyM c = coeffs[k];
    c.trim();
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << kUnknowns[k];
  }
  os << " = 0";
  return os.str();
}

Superspin0Report superspin0_constraints(const MomentumQ& p, const Q& mass) {
  Superspin0Report rep;
  rep.norm2 = minkowski_norm2(p);
  std::vector<PolyRow> rows = superspin0_rows(p), bos, fer;
  for (auto& r : rows) {
    bool b = touches(r, {0, 3, 4, 7}), f = touches(r, {1, 2, 5, 6});
    if (b && f) throw std::logic_error("superspin0: bosonic and fermionic relations mix");
    if (b) bos.push_back(r);
    if (f) fer.push_back(r);
  }
  rep.bosonic = independent(bos);
  rep.fermionic = independent(fer);

  PolyM g;
  for (auto& r : eliminate(bos, {3, 7, 4})) g = poly_gcd(g, r[0]);
  rep.phi_factor = g.normalized();
  PolyM shell = PolyM::m() * PolyM::m() - PolyM(CQ(rep.norm2));
  rep.phi_factor_is_mass_shell = rep.phi_factor == shell.normalized();

  PolyM d;
  auto red = eliminate(fer, {5, 6});
  for (size_t i = 0; i < red.size(); ++i)
    for (size_t j = i + 1; j < red.size(); ++j) d = poly_gcd(d, red[i][1] * red[j][2] - red[i][2] * red[j][1]);
  rep.fermion_determinant = d.normalized();

  // at the supplied mass
  std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
  rep.complex_solution_dim = static_cast<int>(nullspace(evaluate(rows, mass, all), 8).size());
  rep.bosonic_solution_dim = static_cast<int>(nullspace(evaluate(bos, mass, {0, 3, 4, 7}), 4).size());
  rep.fermionic_solution_dim = static_cast<int>(nullspace(evaluate(fer, mass, {1, 2, 5, 6}), 4).size());

  // relations at p alone: ψb in terms of ψ, F in terms of φb
  std::vector<PolyRow> fer_p, bos_p;
  for (int i = 0; i < kDimW; ++i) {
    if (touches(rows[i], {1, 2, 5, 6})) fer_p.push_back(rows[i]);
    if (touches(rows[i], {0, 3, 4, 7})) bos_p.push_back(rows[i]);
  }
  MatQ a = evaluate(fer_p, mass, {5, 6, 1, 2});
  auto piv = rref(a);
  if (piv.size() == 2 && piv[0] == 0 && piv[1] == 1) {
    std::array<std::array<CQ, 2>, 2> R;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) R[r][c] = -a[r][2 + c];
    rep.psibar_of_psi = R;
  }
  MatQ b = evaluate(bos_p, mass, {3, 4, 0, 7});
  auto pb = rref(b);
  if (!pb.empty() && pb[0] == 0 && b[0][2].is_zero() && b[0][3].is_zero() && sgn(mass) != 0)
    rep.F_over_m_phibar = -b[0][1] / CQ(mass);
  return rep;
}

}  // namespace superkit
