#pragma once

// The built-in instance family used by the CLI batch mode and the
// acceptance run.

#include <optional>
#include <string>
#include <vector>

#include "nefcert/graphs.hpp"
#include "nefcert/linalg.hpp"

namespace nefcert {

struct CorpusEntry {
  std::string name;
  std::optional<Graph> graph;      // set for graph instances
  IntMatrix matrix;                // identity matrix, or the row-reduced edge matrix
};

/// identity_1..4, then C3, C4, C5, C6, P3, P4, P5, K_{2,3}, K_{3,3}, bowtie
/// and bridged triangles.
std::vector<CorpusEntry> builtin_corpus();

/// The Reeve tetrahedron conv{0, e1, e2, (1, 1, q)}, as polytope text.
std::string reeve_polytope_text(int q);

}  // namespace nefcert
