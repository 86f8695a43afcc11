#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nefcert/linalg.hpp"
#include "nefcert/polytope.hpp"

namespace nefcert::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Laplace expansion along the first row.
inline Int cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Int term = m(0, c) * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Brute-force lattice points: scan the bounding box, test membership with
// the convex-hull LP.
inline std::vector<Point> scan_lattice_points(std::size_t dim, const std::vector<Point>& pts) {
  Point lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] = hi[i] = pts.front()[i];
    for (const auto& p : pts) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<IntVector> gens;
  for (const auto& p : pts) gens.push_back(to_int_vector(p));
  std::vector<Point> out;
  Point x = lo;
  while (true) {
    if (in_convex_hull(gens, to_int_vector(x))) out.push_back(x);
    std::size_t i = 0;
    while (i < dim && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == dim) break;
    ++x[i];
  }
  return out;
}

}  // namespace nefcert::testing
