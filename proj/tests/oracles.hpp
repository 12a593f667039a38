#pragma once

// Brute-force oracles shared by the unit tests.  They work on explicit
// generator lists and never call the library's sign helpers.

#include <algorithm>
#include <utility>
#include <vector>

#include "superkit/algebra.hpp"

namespace oracle {

// Generators of a mask in canonical order.
inline std::vector<int> gens(int mask) {
  std::vector<int> g;
  for (int k = 0; k < 4; ++k)
    if (mask & (1 << k)) g.push_back(k);
  return g;
}

// Sorts a word of distinct generators by adjacent swaps; returns (sign, mask), sign 0 on repeats.
inline std::pair<int, int> normal_form(std::vector<int> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  int mask = 0;
  for (int g : w) {
    if (mask & (1 << g)) return {0, 0};
    mask |= 1 << g;
  }
  return {sign, mask};
}

// g ∧ monomial
inline std::pair<int, int> wedge_left(int g, int mask) {
  std::vector<int> w{g};
  for (int x : gens(mask)) w.push_back(x);
  return normal_form(w);
}

// Left derivative ∂/∂g: move g to the front, then drop it.
inline std::pair<int, int> left_derivative(int g, int mask) {
  auto w = gens(mask);
  auto it = std::find(w.begin(), w.end(), g);
  if (it == w.end()) return {0, 0};
  int pos = static_cast<int>(it - w.begin());
  return {pos % 2 ? -1 : 1, mask & ~(1 << g)};
}

// Multivector product by expanding words.
inline superkit::Multivector wedge(const superkit::Multivector& x, const superkit::Multivector& y) {
  superkit::Multivector r;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      if (x[a].is_zero() || y[b].is_zero()) continue;
      auto w = gens(a);
      for (int g : gens(b)) w.push_back(g);
      auto [s, m] = normal_form(w);
      if (s) r[m] += superkit::CQ(s) * x[a] * y[b];
    }
  return r;
}

}  // namespace oracle
