#pragma once

// SU(2) weight combinatorics.  Every spin and weight is stored doubled:
// key 1 means ½, key -3 means -3/2.

#include <map>
#include <stdexcept>
#include <string>

namespace superkit {

using WeightMultiset = std::map<int, int>;     // 2w -> multiplicity
using SpinDecomposition = std::map<int, int>;  // 2s -> multiplicity

struct NotARepresentation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string half_str(int twice);  // "3/2", "-1/2", "2"
std::string to_string(const SpinDecomposition& d);

WeightMultiset weights_of_sym(int two_sigma);
WeightMultiset spins_to_weights(const SpinDecomposition& d);
WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b);
int total_dim(const WeightMultiset& w);
int spin_dim(const SpinDecomposition& d);

// Highest-weight stripping.
SpinDecomposition weight_decompose(const WeightMultiset& w);

// Sym^{2α} ⊗ Sym^{2β}: spins α+β down to |α-β|.
SpinDecomposition tensor_sym_decompose(int two_alpha, int two_beta);

// ∧•S₊* ⊗ Sym^{2σ}
SpinDecomposition superspin_multiplet(int two_sigma);

struct DofCount {
  int bosonic = 0;
  int fermionic = 0;
};
DofCount dof_check(int two_sigma);

// ∧•S₊* ⊗ ∧•S₋* ⊗ Sym^{2σ} as a free ∧•S₋*-module: superspin -> multiplicity.
struct SuperfieldContent {
  SpinDecomposition superspins;
  int dimension = 0;  // 16(2σ+1)
  int audited = 0;    // Σ 4(2s+1) · mult
};
SuperfieldContent scalar_superfield_content(int two_sigma = 0);

}  // namespace superkit
