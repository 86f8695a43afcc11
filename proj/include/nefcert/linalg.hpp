#pragma once

// Exact integer and rational linear algebra. Every entry is an
// arbitrary-precision integer; nothing here ever overflows.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nefcert {

using Int = mpz_class;
using Rat = mpq_class;

/// Rationals in canonical form (positive denominator, coprime parts).
using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// `rows` is needed so that an empty column list still has a shape.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(std::span<const std::size_t> indices) const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Appends a row of ones (homogenization).
  IntMatrix with_ones_row() const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

/// Determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& m);

/// Indices of a maximal set of linearly independent rows, chosen greedily
/// in row order.
std::vector<std::size_t> row_basis(const IntMatrix& m);

/// Absolute values of the nonzero r x r minors, r = rank(m), enumerating
/// column subsets in lexicographic order. When m has more rows than its rank
/// the minors are taken on the greedy row basis.
std::vector<Int> maximal_minor_profile(const IntMatrix& m);

/// Full row rank and all nonzero maximal minors share one absolute value.
bool is_unimodular(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  ///< column-style HNF: positive pivots, reduced entries left of each pivot
  IntMatrix u;  ///< unimodular, m * u == h
  std::size_t rank = 0;
};

HermiteForm hnf(const IntMatrix& m);

struct SmithInvariants {
  /// d_1 | d_2 | ... | d_r followed by zeros; length min(rows, cols).
  std::vector<Int> diagonal;

  std::size_t rank() const;
  /// Product of the nonzero invariants (1 for the zero matrix).
  Int product() const;
  bool all_nonzero_are_one() const;
};

SmithInvariants smith_invariants(const IntMatrix& m);

/// Basis of the saturated lattice {u in Z^n : m u = 0}, returned in Hermite
/// normal form so that the output is canonical.
std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m);

/// Some exact solution x of m^T x = b (free variables set to zero), or
/// nothing when the system is inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b);

/// True iff `target` is a convex combination of `points` (exact phase-one
/// simplex with Bland's rule).
bool in_convex_hull(std::span<const IntVector> points, const IntVector& target);

/// Gcd of all entries (0 for the zero vector).
Int content(std::span<const Int> v);

std::string to_string(const IntMatrix& m);

}  // namespace nefcert
