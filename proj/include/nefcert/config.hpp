#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nefcert/linalg.hpp"

namespace nefcert {

/// An integer matrix whose columns lie on an affine hyperplane missing the
/// origin, certified by a rational witness c with <a_i, c> = 1 for every
/// column. Columns are pairwise distinct.
class Configuration {
 public:
  /// Validates the witness; throws NotAConfiguration if it fails.
  Configuration(IntMatrix matrix, RatVector witness);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const RatVector& witness() const noexcept { return witness_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  std::size_t size() const noexcept { return matrix_.cols(); }

 private:
  IntMatrix matrix_;
  RatVector witness_;
};

/// Solves A^T c = 1. Throws RepeatedColumns or NotAConfiguration.
Configuration as_configuration(const IntMatrix& m);

bool has_repeated_columns(const IntMatrix& m);

/// The (d+1) x (2n+1) matrix with columns (a_i, 1), (-a_i, 1), (0, 1).
/// Variables x_i, y_i, z are bound to columns i-1, n+i-1 and 2n.
struct CentrallySymmetric {
  Configuration base;
  IntMatrix full;

  std::size_t n() const noexcept { return base.size(); }
  std::size_t x(std::size_t i) const noexcept { return i - 1; }
  std::size_t y(std::size_t i) const noexcept { return n() + i - 1; }
  std::size_t z() const noexcept { return 2 * n(); }
  std::vector<std::string> variable_names() const;
};

CentrallySymmetric centrally_symmetric(const Configuration& a);

/// (A, 0). Generally not a configuration, hence a raw matrix.
IntMatrix append_origin(const Configuration& a);

/// Columns (p, 1) for each point; throws EmptyInput for an empty list.
IntMatrix homogenize(const std::vector<IntVector>& points);

}  // namespace nefcert
