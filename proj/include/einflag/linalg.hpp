#ifndef EINFLAG_LINALG_HPP
#define EINFLAG_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "einflag/rational.hpp"

namespace einflag {

/// Solves A x = b exactly by Gauss-Jordan elimination over the rationals.
/// A must be square and nonsingular; throws std::runtime_error otherwise.
inline std::vector<Rat> solve_linear_exact(std::vector<std::vector<Rat>> a,
                                           std::vector<Rat> b) {
  const size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_linear_exact: not square");
  if (b.size() != n) throw std::invalid_argument("solve_linear_exact: size mismatch");

  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("solve_linear_exact: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = Rat(1) / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace einflag

#endif
