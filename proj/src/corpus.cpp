#include "nefcert/corpus.hpp"

namespace nefcert {

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (std::size_t d = 1; d <= 4; ++d) out.push_back({"identity_" + std::to_string(d), std::nullopt, IntMatrix::identity(d)});
  const std::pair<const char*, const char*> graphs[] = {
      {"cycle_3", "cycle:3"},         {"cycle_4", "cycle:4"},
      {"cycle_5", "cycle:5"},         {"cycle_6", "cycle:6"},
      {"path_3", "path:3"},           {"path_4", "path:4"},
      {"path_5", "path:5"},           {"complete_bipartite_2_3", "complete_bipartite:2,3"},
      {"complete_bipartite_3_3", "complete_bipartite:3,3"},
      {"bowtie", "bowtie"},           {"bridged_triangles", "bridged_triangles"},
  };
  for (const auto& [name, spec] : graphs) {
    Graph g = parse_family(spec);
    IntMatrix m = reduced_edge_configuration(g).configuration.matrix();
    out.push_back({name, std::move(g), std::move(m)});
  }
  return out;
}

std::string reeve_polytope_text(int q) {
  return "dim 3\n0 0 0\n1 0 0\n0 1 0\n1 1 " + std::to_string(q) + "\n";
}

}  // namespace nefcert
