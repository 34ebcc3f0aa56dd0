#pragma once

// Exact feasibility for {x >= 0 : A x = b} by a phase-one simplex over the
// rationals. Bland's rule keeps it finite without perturbation.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mvcycles/field.hpp"

namespace mv {

/// Returns a feasible x when one exists.
inline std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& A,
                                                           const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("feasible_point: shape mismatch");
  const std::size_t k = m ? A[0].size() : 0;
  // Tableau columns: k structural, m artificial, then the right-hand side.
  const std::size_t cols = k + m + 1;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != k) throw std::invalid_argument("feasible_point: ragged matrix");
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) T[i][j] = s * A[i][j];
    T[i][k + i] = 1;
    T[i][cols - 1] = s * b[i];
    basis[i] = k + i;
  }
  // Reduced costs of the phase-one objective: minimize the artificial sum.
  std::vector<Rational> cost(cols);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < k || j == cols - 1) cost[j] -= T[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-one simplex unbounded");
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[cols - 1]) != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) x[basis[i]] = T[i][cols - 1];
  return x;
}

}  // namespace mv
