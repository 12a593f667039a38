#include "doctest.h"
#include "superkit/repdecomp.hpp"
#include "superkit/symbols.hpp"

using namespace superkit;

TEST_CASE("weights of symmetric powers") {
  CHECK(weights_of_sym(0) == WeightMultiset{{0, 1}});
  CHECK(weights_of_sym(1) == WeightMultiset{{-1, 1}, {1, 1}});
  CHECK(weights_of_sym(2) == WeightMultiset{{-2, 1}, {0, 1}, {2, 1}});
}

TEST_CASE("weight_decompose") {
  auto w = tensor_weights(weights_of_sym(1), weights_of_sym(1));
  CHECK(w == WeightMultiset{{-2, 1}, {0, 2}, {2, 1}});
  CHECK(weight_decompose(w) == SpinDecomposition{{2, 1}, {0, 1}});
  CHECK(weight_decompose(WeightMultiset{{0, 1}}) == SpinDecomposition{{0, 1}});
  // S₊* ⊗ Sym² = Sym¹ ⊕ Sym³
  CHECK(weight_decompose(tensor_weights(weights_of_sym(1), weights_of_sym(2))) == SpinDecomposition{{3, 1}, {1, 1}});
  CHECK_THROWS_AS(weight_decompose(WeightMultiset{{1, 1}}), NotARepresentation);
  // spins_to_weights is a two-sided inverse
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + b <= 20; ++b) {
      auto d = tensor_sym_decompose(a, b);
      CHECK(weight_decompose(spins_to_weights(d)) == d);
    }
}

TEST_CASE("tensor_sym_decompose") {
  CHECK(tensor_sym_decompose(1, 1) == SpinDecomposition{{2, 1}, {0, 1}});
  CHECK(tensor_sym_decompose(2, 1) == SpinDecomposition{{3, 1}, {1, 1}});
  CHECK(tensor_sym_decompose(5, 0) == SpinDecomposition{{5, 1}});
  CHECK(tensor_sym_decompose(1, 2) == tensor_sym_decompose(2, 1));
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) CHECK(spin_dim(tensor_sym_decompose(a, b)) == (a + 1) * (b + 1));
}

TEST_CASE("multiplicity agrees with the decomposition") {
  for (int s = 0; s <= 12; ++s)
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b <= 12; ++b) {
        auto d = tensor_sym_decompose(a, b);
        int expect = d.count(s) ? d.at(s) : 0;
        CHECK(multiplicity(s, a, b) == expect);
      }
}

TEST_CASE("superspin multiplets") {
  CHECK(superspin_multiplet(0) == SpinDecomposition{{0, 2}, {1, 1}});
  CHECK(superspin_multiplet(2) == SpinDecomposition{{2, 2}, {1, 1}, {3, 1}});
  CHECK(superspin_multiplet(1) == SpinDecomposition{{1, 2}, {0, 1}, {2, 1}});
  auto d0 = dof_check(0);
  CHECK(d0.bosonic == 2);
  CHECK(d0.fermionic == 2);
  CHECK(dof_check(1).bosonic == 4);
  CHECK(dof_check(1).fermionic == 4);
  CHECK(dof_check(6).bosonic == 14);
  CHECK(dof_check(6).fermionic == 14);
  for (int s = 0; s <= 20; ++s) {
    auto d = dof_check(s);
    CHECK(d.bosonic == d.fermionic);
    CHECK(d.bosonic == 2 * s + 2);
  }
}

TEST_CASE("scalar superfield content") {
  auto c0 = scalar_superfield_content();
  CHECK(c0.superspins == SpinDecomposition{{0, 2}, {1, 1}});
  auto c1 = scalar_superfield_content(2);
  CHECK(c1.superspins == SpinDecomposition{{2, 2}, {1, 1}, {3, 1}});
  for (int s = 0; s <= 10; ++s) {
    auto c = scalar_superfield_content(s);
    CHECK(c.dimension == 16 * (s + 1));
    CHECK(c.audited == c.dimension);
  }
}

TEST_CASE("half_str") {
  CHECK(half_str(3) == "3/2");
  CHECK(half_str(-1) == "-1/2");
  CHECK(half_str(4) == "2");
}
