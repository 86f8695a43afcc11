#pragma once

// Lattice polytopes: V/H representations, lattice points, Ehrhart data and
// the predicates used by the certification pipelines.
//
// Points are stored as 64-bit integer vectors. Everything that feeds them
// (facets, affine lattice maps) is computed with arbitrary precision and
// converted with an overflow check, so an out-of-range value raises
// ErrorCode::kOverflow rather than wrapping.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nefcert/linalg.hpp"

namespace nefcert {

using Point = std::vector<std::int64_t>;

/// <normal, x> <= rhs (or == rhs for equations); normal is primitive.
struct HalfSpace {
  Point normal;
  std::int64_t rhs = 0;

  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct HRep {
  std::vector<HalfSpace> inequalities;
  std::vector<HalfSpace> equations;
};

/// Coefficients low to high, trailing zeros trimmed.
using Polynomial = std::vector<std::int64_t>;

/// Affine bijection between aff(P) ∩ Z^d and Z^D.
struct AffineLatticeMap {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  Point base;                  // a lattice point of aff(P)
  std::vector<Point> basis;    // D vectors spanning the saturated direction lattice
  std::vector<Point> inverse;  // D integer rows with inverse[i] . basis[j] = delta_ij

  Point to_model(const Point& x) const;
  Point from_model(const Point& y) const;
  bool is_identity() const;
};

class LatticePolytope {
 public:
  /// Deduplicates `points` and keeps only the extreme ones.
  LatticePolytope(std::size_t ambient_dim, std::vector<Point> points);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Extreme points, sorted lexicographically.
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t dim() const;

  const AffineLatticeMap& affine_map() const;
  /// Vertices and facets of the full-dimensional model in Z^dim().
  const std::vector<Point>& model_vertices() const;
  const std::vector<HalfSpace>& model_facets() const;
  /// Equations of the affine hull in ambient coordinates (empty when full).
  const std::vector<HalfSpace>& affine_equations() const;
  /// conv(vertices) ∩ Z^d, sorted lexicographically.
  const std::vector<Point>& lattice_points() const;

  bool contains(const Point& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  struct Cache;
  const Cache& cache() const;

  std::size_t ambient_dim_;
  std::vector<Point> vertices_;
  std::shared_ptr<Cache> cache_;
};

LatticePolytope polytope_from_columns(const IntMatrix& m);

/// Facets in ambient coordinates: inequalities from the model plus the
/// equations of the affine hull. Sorted by (normal, rhs).
HRep facets(const LatticePolytope& p);

const std::vector<Point>& lattice_points(const LatticePolytope& p);

/// |mP ∩ Z^d| for m >= 1.
std::int64_t dilate_count(const LatticePolytope& p, std::int64_t m);

/// Interior lattice points relative to the affine hull.
std::vector<Point> interior_lattice_points(const LatticePolytope& p);

/// h*(P, t) relative to the affine lattice aff(P) ∩ Z^d.
Polynomial h_star(const LatticePolytope& p);

/// h*(P, t) relative to the lattice generated by (p, 1), p ∈ P ∩ Z^d.
/// Coincides with h_star() exactly when P is spanning.
Polynomial h_star_generated(const LatticePolytope& p);

/// The unique interior lattice point when P, translated by it, is reflexive
/// in its affine lattice.
std::optional<Point> reflexive_center(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);

std::optional<std::int64_t> gorenstein_index(const LatticePolytope& p);

bool is_spanning(const LatticePolytope& p);

LatticePolytope negate(const LatticePolytope& p);
LatticePolytope translate(const LatticePolytope& p, const Point& t);
LatticePolytope scale(const LatticePolytope& p, std::int64_t k);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope cayley_sum(std::span<const LatticePolytope> ps);

/// (P ∩ Z^d) + (Q ∩ Z^d) == (P + Q) ∩ Z^d.
bool check_oda(const LatticePolytope& p, const LatticePolytope& q);

struct IdpCheck {
  bool holds = true;
  std::int64_t k_max = 0;
  std::int64_t failing_k = 0;      // 0 when holds
  std::optional<Point> witness;    // a point of kP not decomposable, ambient coordinates
};

/// Bounded check: for 2 <= k <= k_max every lattice point of kP is a sum of
/// k lattice points of P.
IdpCheck idp_check(const LatticePolytope& p, std::int64_t k_max);

bool is_unimodular_simplex(std::span<const Point> simplex);

std::pair<LatticePolytope, AffineLatticeMap> full_dim_model(const LatticePolytope& p);

bool is_palindromic(const Polynomial& h);
std::size_t degree(const Polynomial& h);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

Point to_point(const IntVector& v);
IntVector to_int_vector(const Point& p);

}  // namespace nefcert
