#pragma once

// Simple graphs, their edge configurations, and the odd-cycle condition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nefcert/config.hpp"
#include "nefcert/linalg.hpp"

namespace nefcert {

using Edge = std::pair<std::size_t, std::size_t>;  // 1-indexed, first < second

/// Edges keep their input order (it fixes the variable order downstream);
/// each pair is stored with its smaller endpoint first.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return d_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<std::vector<std::size_t>> adjacency() const;  // 0-indexed

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t d_;
  std::vector<Edge> edges_;
};

/// Columns e_i + e_j in edge order, witness (1/2, ..., 1/2). Throws NoEdges.
Configuration edge_configuration(const Graph& g);

bool is_bipartite(const Graph& g);
/// 0/1 colour per vertex (0-indexed), vertex 1 coloured 0 in its component.
std::optional<std::vector<int>> two_colouring(const Graph& g);
bool is_connected(const Graph& g);

/// NEFCERT_CYCLE_CAP when set to a positive integer, else 10000.
std::size_t default_cycle_cap();

/// Vertex sets (bit v-1 for vertex v) of all simple odd cycles, each cycle
/// once. Throws CycleBudgetExceeded beyond `cap` cycles.
std::vector<std::uint64_t> odd_cycles(const Graph& g, std::size_t cap);

/// No two vertex-disjoint odd cycles.
bool odd_cycles_pairwise_intersect(const Graph& g, std::size_t cap = default_cycle_cap());

/// d - 2 when bipartite, else d - 1. Throws NotConnected.
std::size_t edge_polytope_dim(const Graph& g);

struct ReducedEdgeMatrix {
  Configuration configuration;
  std::optional<std::size_t> deleted_vertex;  // 1-indexed
};

/// The edge configuration, with the row of vertex d deleted when G is
/// bipartite (vertex d is the last vertex of its colour class).
ReducedEdgeMatrix reduced_edge_configuration(const Graph& g);

/// cycle:k, path:k, complete:k, complete_bipartite:a,b, bowtie, bridged_triangles.
Graph family(std::string_view kind, const std::vector<std::size_t>& params);
/// "cycle:4", "complete_bipartite:2,3", "bowtie".
Graph parse_family(std::string_view spec);
bool is_family_spec(std::string_view spec);

/// All connected graphs on n vertices up to isomorphism (n <= 8).
std::vector<Graph> connected_graphs(std::size_t n);

/// "d m" followed by "u v" lines.
std::string to_string(const Graph& g);

}  // namespace nefcert
