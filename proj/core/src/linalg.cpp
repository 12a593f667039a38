#include "superkit/linalg.hpp"

namespace superkit {

std::vector<int> rref(MatQ& a) {
  std::vector<int> piv;
  if (a.empty()) return piv;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    CQ inv = CQ(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CQ f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(MatQ a) { return static_cast<int>(rref(a).size()); }

std::vector<VecQ> nullspace(MatQ a, int ncols) {
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<VecQ> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    VecQ v(ncols, CQ(0));
    v[f] = CQ(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(v);
  }
  return out;
}

bool in_span(const std::vector<VecQ>& basis, const VecQ& v) {
  if (basis.empty()) {
    for (auto& x : v) if (!x.is_zero()) return false;
    return true;
  }
  const size_t n = v.size();
  MatQ a(n, VecQ(basis.size(), CQ(0)));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
  int r0 = rank(a);
  for (size_t i = 0; i < n; ++i) a[i].push_back(v[i]);
  return rank(a) == r0;
}

}  // namespace superkit
