#pragma once

// Text formats shared by the CLI and the corpus dump.
//
//   matrix:   "d n", then d rows of n integers
//   polytope: "dim d", then one vertex per line (a matrix file also works;
//             its columns are the points)
//   graph:    "d m", then m lines "u v", 1-indexed
//
// Blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <string>
#include <string_view>

#include "nefcert/graphs.hpp"
#include "nefcert/linalg.hpp"
#include "nefcert/polytope.hpp"

namespace nefcert {

IntMatrix parse_matrix(std::string_view text);
LatticePolytope parse_polytope(std::string_view text);
Graph parse_graph(std::string_view text);

std::string format_polytope(const LatticePolytope& p);

/// Throws Parse when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nefcert
