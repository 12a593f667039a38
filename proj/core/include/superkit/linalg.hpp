#pragma once

#include <vector>

#include "superkit/exact.hpp"

namespace superkit {

using MatQ = std::vector<std::vector<CQ>>;  // row-major, exact
using VecQ = std::vector<CQ>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(MatQ& a);
int rank(MatQ a);
// Basis of {x : a x = 0}, one vector per free column (free entry = 1).
std::vector<VecQ> nullspace(MatQ a, int ncols);
// True when v lies in the span of the given vectors.
bool in_span(const std::vector<VecQ>& basis, const VecQ& v);

}  // namespace superkit
