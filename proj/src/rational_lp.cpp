// Exact phase-one simplex deciding membership in a convex hull.

#include <vector>

#include "nefcert/error.hpp"
#include "nefcert/linalg.hpp"

namespace nefcert {

bool in_convex_hull(std::span<const IntVector> points, const IntVector& target) {
  if (points.empty()) return false;
  const std::size_t dim = target.size();
  const std::size_t n = points.size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "point dimension");

  // Rows: sum_j lambda_j p_j = target, sum_j lambda_j = 1. Columns: lambda_j,
  // then one artificial per row, then the right-hand side.
  const std::size_t m = dim + 1;
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(width));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i < dim ? Rat(points[j][i]) : Rat(1);
    t[i][rhs] = i < dim ? Rat(target[i]) : Rat(1);
    if (t[i][rhs] < 0)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = -t[i][j];
    if (t[i][rhs] < 0) t[i][rhs] = -t[i][rhs];
    t[i][n + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  auto cost = [&](std::size_t j) { return j >= n ? Rat(1) : Rat(0); };
  while (true) {
    // Bland's rule: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      Rat reduced = cost(j);
      for (std::size_t i = 0; i < m; ++i) reduced -= cost(basis[i]) * t[i][j];
      if (reduced < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error(ErrorCode::kInternalInconsistency, "phase-one LP unbounded");
    const Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rat objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][rhs];
  return objective == 0;
}

}  // namespace nefcert
