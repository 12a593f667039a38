#pragma once

// Identity suites and the end-to-end pipeline.  Every randomized check is
// reproducible from the seed.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "superkit/algebra.hpp"
#include "superkit/ledger.hpp"
#include "superkit/spin_geometry.hpp"

namespace superkit {

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  double max_error = 0;
  double runtime_ms = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::vector<Check> checks;
  ledger::Snapshot ledger = ledger::snapshot();

  bool passed() const;
  double max_error() const;
  const Check* find(const std::string& id) const;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int integer(int lo, int hi);
  double uniform(double lo, double hi);
  Q rational(int max_num = 9, int max_den = 9);
  CQ complex(int max_num = 9, int max_den = 9);
  PairingMatrix invertible_pairing();
  MomentumQ momentum();
  // Exact point of the forward orbit of mass m (Pythagorean parametrization).
  MomentumQ on_shell(const Q& m);
  Momentum on_shell_numeric(double m, double max_rapidity = 2.0);
  Mat2d spin_element(double scale = 0.7);
  Multivector multivector();

 private:
  std::mt19937_64 gen_;
};

Report suite_algebra(std::uint64_t seed, int random_pairings = 20);
Report suite_superfourier(std::uint64_t seed, int trials = 30);
Report suite_symbols(std::uint64_t seed, double tol = 1e-9, int trials = 30);
Report suite_brackets(std::uint64_t seed, int momenta = 10);

// "all" concatenates the four suites.
Report run_suite(const std::string& name, std::uint64_t seed, double tol = 1e-9);
const std::vector<std::string>& suite_names();

// Solution, symbols, transform identities and grid residuals at one momentum.
Report run_pipeline(double mass, const Momentum& p, std::uint64_t seed, double tol = 1e-9);

}  // namespace superkit
