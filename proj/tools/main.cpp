// superkit: command-line front end.  Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "superkit/components.hpp"
#include "superkit/repdecomp.hpp"
#include "superkit/suites.hpp"
#include "superkit/symbols.hpp"

using namespace superkit;
using io::json;

namespace {

struct Output {
  json j;
  std::string text;
  bool passed = true;
};

double default_tol() {
  if (const char* e = std::getenv("SUPERKIT_TOL")) {
    char* end = nullptr;
    double t = std::strtod(e, &end);
    if (end == e || !(t > 0)) throw io::UsageError("SUPERKIT_TOL must be a positive number");
    return t;
  }
  return 1e-9;
}

Output from_report(const Report& r) { return {io::to_json(r), io::text_table(r), r.passed()}; }

void add_check(Report& r, const std::string& id, bool pass, double err, const std::string& lhs, const std::string& rhs) {
  Check c;
  c.id = id;
  c.pass = pass;
  c.max_error = err;
  c.lhs = lhs;
  c.rhs = rhs;
  r.checks.push_back(c);
}

using Clock = std::chrono::steady_clock;

void stamp(Report& r, Clock::time_point t0) {
  r.checks.back().runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

bool exactly_on_shell(const MomentumQ& p, const Q& m) { return sgn(p.p[0]) > 0 && minkowski_norm2(p) == m * m; }

void require_on_shell(const io::ParsedMomentum& p, double m, double tol) {
  if (std::fabs(minkowski_norm2(p.numeric) - m * m) > tol * std::max(1.0, m * m))
    throw OffOrbit("momentum is not on the mass shell");
  if (p.numeric.p[0] <= 0) throw NonPositiveEnergy("p0 must be positive");
}

std::array<CQ, 2> parse_pair(const std::string& s) {
  std::vector<Q> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(io::parse_rational(item));
  if (v.size() == 2) return {CQ(v[0]), CQ(v[1])};
  if (v.size() == 4) return {CQ(v[0], v[1]), CQ(v[2], v[3])};
  throw io::UsageError("spinor seed needs 2 real or 4 (re,im) components");
}

CQ parse_complex(const std::string& s) {
  std::vector<Q> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(io::parse_rational(item));
  if (v.size() == 1) return CQ(v[0]);
  if (v.size() == 2) return CQ(v[0], v[1]);
  throw io::UsageError("complex seed is 're' or 're,im'");
}

// ---- repdecomp -----------------------------------------------------------------

Output cmd_decompose(const std::string& alpha, const std::string& beta) {
  int ta = io::parse_twice_spin(alpha), tb = io::parse_twice_spin(beta);
  SpinDecomposition d = tensor_sym_decompose(ta, tb);
  SpinDecomposition w = weight_decompose(tensor_weights(weights_of_sym(ta), weights_of_sym(tb)));
  int dim = (ta + 1) * (tb + 1);
  bool ok = d == w && spin_dim(d) == dim;
  std::ostringstream t;
  t << "Sym^" << ta << " x Sym^" << tb << "  (alpha " << half_str(ta) << ", beta " << half_str(tb) << ")\n";
  t << std::left << std::setw(8) << "spin" << "multiplicity\n";
  for (auto it = d.rbegin(); it != d.rend(); ++it) t << std::setw(8) << half_str(it->first) << it->second << "\n";
  t << "dimension " << dim << " = " << spin_dim(d) << ", weight stripping " << (d == w ? "agrees" : "DISAGREES") << "\n";
  json j = {{"alpha", half_str(ta)},           {"beta", half_str(tb)},  {"spins", io::to_json(d)},
            {"weight_decompose", io::to_json(w)}, {"dimension", dim},   {"passed", ok},
            {"ledger", io::to_json(ledger::snapshot())}};
  return {j, t.str(), ok};
}

Output cmd_multiplet(const std::string& sigma) {
  int ts = io::parse_twice_spin(sigma);
  SpinDecomposition d = superspin_multiplet(ts);
  DofCount dof = dof_check(ts);
  bool ok = dof.bosonic == dof.fermionic && dof.bosonic == 2 * (ts + 1);
  std::ostringstream t;
  t << "superspin " << half_str(ts) << "\n" << std::left << std::setw(8) << "spin" << "particles\n";
  for (auto it = d.rbegin(); it != d.rend(); ++it) t << std::setw(8) << half_str(it->first) << it->second << "\n";
  t << "bosonic dof " << dof.bosonic << ", fermionic dof " << dof.fermionic << "\n";
  json j = {{"sigma", half_str(ts)},
            {"spins", io::to_json(d)},
            {"dof", {{"bosonic", dof.bosonic}, {"fermionic", dof.fermionic}}},
            {"passed", ok},
            {"ledger", io::to_json(ledger::snapshot())}};
  return {j, t.str(), ok};
}

Output cmd_content(const std::string& sigma) {
  int ts = io::parse_twice_spin(sigma);
  SuperfieldContent c = scalar_superfield_content(ts);
  bool ok = c.dimension == c.audited;
  std::ostringstream t;
  t << "W x Sym^" << ts << " over the odd minus factor\n" << std::left << std::setw(12) << "superspin" << "multiplicity\n";
  for (auto it = c.superspins.rbegin(); it != c.superspins.rend(); ++it)
    t << std::setw(12) << half_str(it->first) << it->second << "\n";
  t << "dimension " << c.dimension << " = " << c.audited << "\n";
  json j = {{"sigma", half_str(ts)},      {"superspins", io::to_json(c.superspins)}, {"dimension", c.dimension},
            {"audited", c.audited},       {"passed", ok},
            {"ledger", io::to_json(ledger::snapshot())}};
  return {j, t.str(), ok};
}

// ---- geometry and symbols ---------------------------------------------------------

Output cmd_orbit(const std::string& mom, double tol) {
  auto p = io::parse_momentum(mom);
  OrbitClass c = classify_orbit(p.numeric, tol);
  json j = {{"momentum", p.numeric.p}, {"norm2", minkowski_norm2(p.numeric)}, {"class", to_string(c)},
            {"tol", tol},              {"ledger", io::to_json(ledger::snapshot())}};
  return {j, to_string(c) + "  (|p|^2 = " + fmt(minkowski_norm2(p.numeric)) + ")\n", true};
}

Output cmd_kernel(const std::string& symbol, const std::string& mass, const std::string& mom, double tol) {
  auto p = io::parse_momentum(mom);
  Q m = io::parse_rational(mass);
  if (sgn(m) <= 0) throw io::UsageError("mass must be positive");
  json j = {{"symbol", symbol}, {"ledger", io::to_json(ledger::snapshot())}};
  std::ostringstream t;
  if (symbol == "dirac") {
    Mat4d u = dirac_symbol(p.numeric, m.get_d());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(u), Eigen::ComputeFullV);
    int k = numeric_kernel_dim(u, std::sqrt(tol));
    json basis = json::array();
    for (int c = 4 - k; c < 4; ++c) {
      json v = json::array();
      for (int r = 0; r < 4; ++r) v.push_back({svd.matrixV()(r, c).real(), svd.matrixV()(r, c).imag()});
      basis.push_back(v);
    }
    j["kernel_dim"] = k;
    j["basis"] = basis;
    j["constraints"] = json::array({"(gamma(p)/m - Id) v = 0"});
    t << "Dirac symbol kernel dimension " << k << "\n";
  } else if (symbol == "chiral") {
    auto ns = chiral_nullspace(gamma_pair(p.exact));
    json basis = json::array();
    for (auto& v : ns) basis.push_back(io::to_json(v));
    j["kernel_dim"] = ns.size();
    j["basis"] = basis;
    j["constraints"] = json::array({"zeta_dbar_1(p) f = 0", "zeta_dbar_2(p) f = 0"});
    t << "chiral kernel dimension " << ns.size() << "\n";
    for (auto& v : ns) t << "  " << v.str() << "\n";
  } else if (symbol == "superspin0") {
    auto rep = superspin0_constraints(p.exact, m);
    json cons = json::array();
    for (auto& r : rep.bosonic) cons.push_back(r.str());
    for (auto& r : rep.fermionic) cons.push_back(r.str());
    j["kernel_dim"] = rep.complex_solution_dim;
    j["basis"] = json::array();
    j["constraints"] = cons;
    j["phi_factor"] = rep.phi_factor.str();
    j["phi_factor_is_mass_shell"] = rep.phi_factor_is_mass_shell;
    j["fermion_determinant"] = rep.fermion_determinant.str();
    j["bosonic_solution_dim"] = rep.bosonic_solution_dim;
    j["fermionic_solution_dim"] = rep.fermionic_solution_dim;
    if (rep.F_over_m_phibar) j["F_over_m_phibar"] = rep.F_over_m_phibar->str();
    t << "unknowns (phi, psi1, psi2, F, phib, psib1, psib2, Fb); barred values belong to -p\n";
    for (auto& c : cons) t << "  " << c.get<std::string>() << "\n";
    t << "eliminant on phi: " << rep.phi_factor.str() << "\n";
    t << "fermionic determinant: " << rep.fermion_determinant.str() << "\n";
    t << "complex solution dimension at m = " << m.get_str() << ": " << rep.complex_solution_dim << "\n";
  } else {
    throw io::UsageError("symbol must be dirac, chiral or superspin0");
  }
  return {j, t.str(), true};
}

// ---- transforms -------------------------------------------------------------------

Output cmd_superft(const std::string& in, const std::string& out, bool inverse) {
  std::ifstream f(in);
  if (!f) throw io::UsageError("cannot read " + in);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw io::UsageError(std::string("bad JSON in ") + in + ": " + e.what());
  }
  SuperFunction<CQ> sf = io::superfunction_from_json(j);
  SuperFunction<CQ> r = inverse ? inverse_super_ft(sf) : super_ft(sf);
  json rj = io::to_json(r);
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) throw io::UsageError("cannot write " + out);
    o << rj.dump(2) << "\n";
  }
  json rep = {{"input", in}, {"output", out}, {"result", rj}, {"ledger", io::to_json(ledger::snapshot())}};
  return {rep, out.empty() ? rj.dump(2) + "\n" : "wrote " + out + "\n", true};
}

// ---- components -------------------------------------------------------------------

struct Seeds {
  CQ a = CQ(1);
  std::array<CQ, 2> u{CQ(1), CQ(0)};
};

Output cmd_solve(const std::string& mass, const std::string& mom, const Seeds& s, double tol) {
  auto p = io::parse_momentum(mom);
  Q m = io::parse_rational(mass);
  if (sgn(m) <= 0) throw io::UsageError("mass must be positive");
  Report r;
  r.suite = "solve";
  r.tol = tol;
  json data;
  if (exactly_on_shell(p.exact, m)) {
    auto c = solution_generator<CQ>(p.exact, CQ(m), s.a, s.u);
    auto res = component_residual(c, CQ(m));
    add_check(r, "components.residual", res.is_zero(), res.max_abs(), "exact plane-wave residuals", "0");
    add_check(r, "components.wz_operator", wz_operator(chiral_expand(c), CQ(m)).is_zero(), 0, "-Dbar2 conj(f) + m f", "0");
    data = io::to_json(c);
  } else {
    require_on_shell(p, m.get_d(), tol);
    std::array<cd, 2> u{s.u[0].to_complex(), s.u[1].to_complex()};
    auto c = solution_generator<cd>(p.numeric, cd(m.get_d()), s.a.to_complex(), u, tol);
    auto res = component_residual(c, cd(m.get_d()));
    add_check(r, "components.residual", res.max_abs() <= tol, res.max_abs(), "plane-wave residuals", "0");
    data = io::to_json(c);
  }
  Output o = from_report(r);
  o.j["solution"] = data;
  o.text = data.dump(2) + "\n" + o.text;
  return o;
}

Output cmd_wz_check(const std::string& mass, const std::string& mom, const std::string& grid, const std::string& ns,
                    const Seeds& s, double tol) {
  auto p = io::parse_momentum(mom);
  Q m = io::parse_rational(mass);
  if (sgn(m) <= 0) throw io::UsageError("mass must be positive");
  require_on_shell(p, m.get_d(), tol);
  int n = 5;
  double h = 0.05;
  if (!grid.empty()) {
    auto comma = grid.find(',');
    if (comma == std::string::npos) throw io::UsageError("--grid expects n,h");
    n = std::stoi(grid.substr(0, comma));
    h = std::stod(grid.substr(comma + 1));
    if (!(h > 0)) throw io::UsageError("grid spacing must be positive");
  }
  Report r;
  r.suite = "wz-check";
  r.tol = tol;
  const double md = m.get_d();
  std::array<cd, 2> u{s.u[0].to_complex(), s.u[1].to_complex()};
  auto t0 = Clock::now();
  auto c = solution_generator<cd>(p.numeric, cd(md), s.a.to_complex(), u, tol);
  auto res = component_residual(c, cd(md));
  add_check(r, "components.residual", res.max_abs() <= tol, res.max_abs(), "plane-wave residuals", "0");
  stamp(r, t0);
  t0 = Clock::now();

  Grid4 g;
  g.n = n;
  g.h = h;
  GridResidual g1 = grid_residual(sample(c, g), md);
  g.h = h / 2;
  GridResidual g2 = grid_residual(sample(c, g), md);
  double e1 = std::max({g1.max_kg, g1.max_dirac, g1.max_f}), e2 = std::max({g2.max_kg, g2.max_dirac, g2.max_f});
  double amp = std::max({c.phi.max_abs(), c.psi[0].max_abs(), c.psi[1].max_abs()});
  double p2 = 0;
  for (double x : p.numeric.p) p2 += x * x;
  double gtol = 10 * h * h * amp * p2;
  add_check(r, "grid.residual", e1 <= gtol, e1,
            "max residual at h = " + fmt(h) + ": kg " + fmt(g1.max_kg) + ", dirac " + fmt(g1.max_dirac),
            "<= 10 h^2 A |p|_E^2 = " + fmt(gtol));
  stamp(r, t0);
  double order = std::log2(e1 / e2);
  add_check(r, "grid.order", std::fabs(order - 2) <= 0.2, std::fabs(order - 2), "order " + fmt(order), "2.0 +- 0.2");
  stamp(r, t0);

  if (exactly_on_shell(p.exact, m)) {
    std::stringstream ss(ns);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int N = std::stoi(item);
      if (N < 0 || N > 6) throw io::UsageError("N must be in [0, 6]");
      t0 = Clock::now();
      auto rep = wz_equivalence_check(N, p.exact, m);
      std::ostringstream l;
      l << "solution dim " << rep.solution_dim << " of " << rep.unknowns << " real unknowns";
      std::ostringstream rr;
      rr << "Lambda_even x E0 + Lambda_odd x E1, dim " << rep.predicted_dim << " (E0 " << rep.scalar_bosonic_dim
         << ", E1 " << rep.scalar_fermionic_dim << ")";
      add_check(r, "representability.N" + std::to_string(N), rep.passed(), std::abs(rep.solution_dim - rep.predicted_dim),
                l.str(), rr.str());
      stamp(r, t0);
    }
  }
  Output o = from_report(r);
  if (!exactly_on_shell(p.exact, m))
    o.j["notes"] = "momentum is not exactly on the mass shell; the exact representability check needs rational input";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superkit: Grassmann module, super Fourier transform and Wess-Zumino checks"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON");

  std::uint64_t seed = 1;
  std::string suite = "all", alpha, beta, sigma = "0", mass = "1", mom = "1,0,0,0", symbol = "dirac";
  std::string input, output, grid, ns = "0,2,4", a_seed = "1", u_seed = "1,0";
  bool inverse = false;
  double orbit_tol = 0;

  auto* ident = app.add_subcommand("identities", "run an identity suite");
  ident->add_option("--suite", suite, "all|algebra|superfourier|symbols|brackets");
  ident->add_option("--seed", seed);
  ident->add_flag("--json", as_json);

  auto* dec = app.add_subcommand("decompose", "Sym^{2a} x Sym^{2b} spin content");
  dec->add_option("--alpha", alpha)->required();
  dec->add_option("--beta", beta)->required();
  dec->add_flag("--json", as_json);

  auto* mult = app.add_subcommand("multiplet", "superspin multiplet");
  mult->add_option("--sigma", sigma);
  mult->add_flag("--json", as_json);

  auto* cont = app.add_subcommand("content", "superspin content of the scalar superfield");
  cont->add_option("--sigma", sigma);
  cont->add_flag("--json", as_json);

  auto* ker = app.add_subcommand("kernel", "kernel of a symbol at a momentum");
  ker->add_option("--symbol", symbol, "dirac|chiral|superspin0");
  ker->add_option("--mass", mass);
  ker->add_option("--momentum", mom);
  ker->add_flag("--json", as_json);

  auto* sft = app.add_subcommand("superft", "super Fourier transform of a superfunction");
  sft->add_option("--input", input)->required();
  sft->add_option("--output", output);
  sft->add_flag("--inverse", inverse);
  sft->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "on-shell chiral solution");
  solve->add_option("--mass", mass);
  solve->add_option("--momentum", mom);
  solve->add_option("--a", a_seed, "scalar seed re[,im]");
  solve->add_option("--u", u_seed, "spinor seed u1,u2 or re1,im1,re2,im2");
  solve->add_flag("--json", as_json);

  auto* wz = app.add_subcommand("wz-check", "Wess-Zumino component and representability checks");
  wz->add_option("--mass", mass);
  wz->add_option("--momentum", mom);
  wz->add_option("--grid", grid, "n,h");
  wz->add_option("--N", ns, "auxiliary generator counts, comma separated");
  wz->add_option("--a", a_seed);
  wz->add_option("--u", u_seed);
  wz->add_flag("--json", as_json);

  auto* orb = app.add_subcommand("orbit-classify", "classify a momentum");
  orb->add_option("--momentum", mom);
  orb->add_option("--tol", orbit_tol);
  orb->add_flag("--json", as_json);

  auto* pipe = app.add_subcommand("pipeline", "end-to-end check at one momentum");
  pipe->add_option("--mass", mass);
  pipe->add_option("--momentum", mom);
  pipe->add_option("--seed", seed);
  pipe->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const double tol = default_tol();
    Output out;
    Seeds s{parse_complex(a_seed), parse_pair(u_seed)};
    if (*ident) {
      Report r = run_suite(suite, seed, tol);
      out = from_report(r);
    } else if (*dec) {
      out = cmd_decompose(alpha, beta);
    } else if (*mult) {
      out = cmd_multiplet(sigma);
    } else if (*cont) {
      out = cmd_content(sigma);
    } else if (*ker) {
      out = cmd_kernel(symbol, mass, mom, tol);
    } else if (*sft) {
      out = cmd_superft(input, output, inverse);
    } else if (*solve) {
      out = cmd_solve(mass, mom, s, tol);
    } else if (*wz) {
      out = cmd_wz_check(mass, mom, grid, ns, s, tol);
    } else if (*orb) {
      out = cmd_orbit(mom, orbit_tol);
    } else if (*pipe) {
      Q m = io::parse_rational(mass);
      Report r = run_pipeline(m.get_d(), io::parse_momentum(mom).numeric, seed, tol);
      out = from_report(r);
    }
    if (as_json)
      std::cout << out.j.dump(2) << "\n";
    else
      std::cout << out.text;
    return out.passed ? 0 : 1;
  } catch (const UnknownSuite& e) {
    std::cerr << "UnknownSuite: " << e.what() << "\n";
  } catch (const OffOrbit& e) {
    std::cerr << "OffOrbit: " << e.what() << "\n";
  } catch (const NonPositiveEnergy& e) {
    std::cerr << "NonPositiveEnergy: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const io::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
