#include "superkit/repdecomp.hpp"

#include <cstdlib>

namespace superkit {

namespace {

void check_twice(int t) {
  if (t < 0) throw std::invalid_argument("spin must be non-negative");
}

// weights of ∧•S₊* split by degree parity
WeightMultiset exterior_even() { return {{0, 2}}; }
WeightMultiset exterior_odd() { return weights_of_sym(1); }

WeightMultiset merged(WeightMultiset a, const WeightMultiset& b) {
  for (auto& [w, m] : b) a[w] += m;
  return a;
}

}  // namespace

std::string half_str(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string to_string(const SpinDecomposition& d) {
  std::string s = "{";
  bool first = true;
  for (auto& [t, m] : d) {
    if (!first) s += ", ";
    first = false;
    s += half_str(t) + ":" + std::to_string(m);
  }
  return s + "}";
}

WeightMultiset weights_of_sym(int two_sigma) {
  check_twice(two_sigma);
  WeightMultiset w;
  for (int k = -two_sigma; k <= two_sigma; k += 2) w[k] = 1;
  return w;
}

WeightMultiset spins_to_weights(const SpinDecomposition& d) {
  WeightMultiset w;
  for (auto& [t, m] : d)
    for (auto& [k, n] : weights_of_sym(t)) w[k] += n * m;
  return w;
}

WeightMultiset tensor_weights(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset w;
  for (auto& [x, m] : a)
    for (auto& [y, n] : b) w[x + y] += m * n;
  return w;
}

int total_dim(const WeightMultiset& w) {
  int n = 0;
  for (auto& [k, m] : w) n += m;
  return n;
}

int spin_dim(const SpinDecomposition& d) {
  int n = 0;
  for (auto& [t, m] : d) n += (t + 1) * m;
  return n;
}

SpinDecomposition weight_decompose(const WeightMultiset& w) {
  WeightMultiset rest;
  for (auto& [k, m] : w) {
    if (m < 0) throw NotARepresentation("negative weight multiplicity");
    if (m > 0) rest[k] = m;
  }
  SpinDecomposition d;
  while (!rest.empty()) {
    const int top = rest.rbegin()->first;
    const int mult = rest.rbegin()->second;
    if (top < 0) throw NotARepresentation("highest remaining weight is negative");
    for (int k = -top; k <= top; k += 2) {
      auto it = rest.find(k);
      const int have = it == rest.end() ? 0 : it->second;
      if (have < mult) throw NotARepresentation("weight " + half_str(k) + " has too small a multiplicity");
      if (have == mult)
        rest.erase(it);
      else
        it->second -= mult;
    }
    d[top] += mult;
  }
  return d;
}

SpinDecomposition tensor_sym_decompose(int two_alpha, int two_beta) {
  check_twice(two_alpha);
  check_twice(two_beta);
  SpinDecomposition d;
  for (int t = two_alpha + two_beta; t >= std::abs(two_alpha - two_beta); t -= 2) d[t] = 1;
  return d;
}

SpinDecomposition superspin_multiplet(int two_sigma) {
  check_twice(two_sigma);
  return weight_decompose(tensor_weights(merged(exterior_even(), exterior_odd()), weights_of_sym(two_sigma)));
}

DofCount dof_check(int two_sigma) {
  check_twice(two_sigma);
  const WeightMultiset s = weights_of_sym(two_sigma);
  return {spin_dim(weight_decompose(tensor_weights(exterior_even(), s))),
          spin_dim(weight_decompose(tensor_weights(exterior_odd(), s)))};
}

SuperfieldContent scalar_superfield_content(int two_sigma) {
  check_twice(two_sigma);
  SuperfieldContent c;
  // ∧•S₋* is the free factor
  const WeightMultiset plus = merged(exterior_even(), exterior_odd());
  c.superspins = weight_decompose(tensor_weights(plus, weights_of_sym(two_sigma)));
  c.dimension = 16 * (two_sigma + 1);
  for (auto& [t, m] : c.superspins) c.audited += 4 * (t + 1) * m;
  return c;
}

}  // namespace superkit
