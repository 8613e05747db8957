#pragma once

#include <utility>
#include <vector>

#include "qbern/errors.hpp"

namespace qbern {

// Gaussian elimination over an exact field.  Pivots are chosen as the first
// nonzero entry in column order; magnitude-based pivoting is meaningless in
// an exact field.  Throws ContradictionError when a pivot column is zero.
template <class F>
std::vector<F> solve_dense_system(std::vector<std::vector<F>> m, std::vector<F> rhs) {
  const size_t n = m.size();
  if (rhs.size() != n) throw UsageError("system matrix and rhs sizes differ");
  for (const auto& row : m)
    if (row.size() != n) throw UsageError("system matrix is not square");

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n)
      throw ContradictionError("singular system: no nonzero pivot in a column");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    const F inv_pivot = F(1) / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv_pivot;
    rhs[col] = rhs[col] * inv_pivot;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const F f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
      rhs[row] = rhs[row] - f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace qbern
