#pragma once

// Facet enumeration for full-dimensional point sets in Z^dim. Two
// independent routes are provided; full_dim_facets() picks one and the
// tests compare them.

#include <cstddef>
#include <vector>

#include "nefcert/polytope.hpp"

namespace nefcert::detail {

/// Every dim-subset spanning a hyperplane, kept when all points lie on one
/// side. Practical for dim <= 3.
std::vector<HalfSpace> facets_by_subsets(const std::vector<Point>& points, std::size_t dim);

/// Double description on the cone {(a, b) : b - <a, p> >= 0 for all p}.
std::vector<HalfSpace> facets_by_double_description(const std::vector<Point>& points,
                                                    std::size_t dim);

std::vector<HalfSpace> full_dim_facets(const std::vector<Point>& points, std::size_t dim);

}  // namespace nefcert::detail
