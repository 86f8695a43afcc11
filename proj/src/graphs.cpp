#include "nefcert/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

#include "nefcert/error.hpp"

namespace nefcert {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : d_(vertex_count) {
  if (d_ > 64) throw Error(ErrorCode::kBadParams, "at most 64 vertices");
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::kBadParams, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > d_) throw Error(ErrorCode::kBadParams, "vertex out of range");
    if (!seen.insert({u, v}).second)
      throw Error(ErrorCode::kBadParams, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
    edges_.emplace_back(u, v);
  }
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(d_);
  for (auto [u, v] : edges_) {
    adj[u - 1].push_back(v - 1);
    adj[v - 1].push_back(u - 1);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

Configuration edge_configuration(const Graph& g) {
  if (g.edges().empty()) throw Error(ErrorCode::kNoEdges, "graph has no edges");
  IntMatrix m(g.vertex_count(), g.edges().size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    m(g.edges()[k].first - 1, k) = 1;
    m(g.edges()[k].second - 1, k) = 1;
  }
  return Configuration(std::move(m), RatVector(g.vertex_count(), Rat(1, 2)));
}

std::optional<std::vector<int>> two_colouring(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.vertex_count();
}

std::size_t default_cycle_cap() {
  if (const char* env = std::getenv("NEFCERT_CYCLE_CAP")) {
    std::size_t cap = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && ptr == s.data() + s.size() && cap > 0) return cap;
  }
  return 10000;
}

std::vector<std::uint64_t> odd_cycles(const Graph& g, std::size_t cap) {
  const auto adj = g.adjacency();
  const std::size_t d = g.vertex_count();
  std::vector<std::uint64_t> out;
  std::size_t found = 0;
  std::vector<std::size_t> path;
  std::uint64_t on_path = 0;

  // Cycles are rooted at their smallest vertex and traversed in the
  // direction whose second vertex is smaller than the last one.
  auto dfs = [&](auto&& self, std::size_t root, std::size_t u) -> void {
    for (auto v : adj[u]) {
      if (v == root && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) {
        if (++found > cap)
          throw Error(ErrorCode::kCycleBudgetExceeded, "more than " + std::to_string(cap) + " odd cycles");
        out.push_back(on_path);
        continue;
      }
      if (v <= root || (on_path >> v & 1)) continue;
      path.push_back(v);
      on_path |= std::uint64_t{1} << v;
      self(self, root, v);
      on_path &= ~(std::uint64_t{1} << v);
      path.pop_back();
    }
  };
  for (std::size_t r = 0; r < d; ++r) {
    path = {r};
    on_path = std::uint64_t{1} << r;
    dfs(dfs, r, r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool odd_cycles_pairwise_intersect(const Graph& g, std::size_t cap) {
  if (is_bipartite(g)) return true;
  auto cycles = odd_cycles(g, cap);
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if ((cycles[i] & cycles[j]) == 0) return false;
  return true;
}

std::size_t edge_polytope_dim(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
  return is_bipartite(g) ? g.vertex_count() - 2 : g.vertex_count() - 1;
}

ReducedEdgeMatrix reduced_edge_configuration(const Graph& g) {
  Configuration full = edge_configuration(g);
  if (!is_bipartite(g)) return {std::move(full), std::nullopt};
  const std::size_t d = g.vertex_count();
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r + 1 < d; ++r) keep.push_back(r);
  return {as_configuration(full.matrix().select_rows(keep)), d};
}

Graph family(std::string_view kind, const std::vector<std::size_t>& p) {
  auto need = [&](std::size_t count, std::size_t min_value) {
    if (p.size() != count) throw Error(ErrorCode::kBadParams, std::string(kind) + ": wrong parameter count");
    for (auto x : p)
      if (x < min_value) throw Error(ErrorCode::kBadParams, std::string(kind) + ": parameter too small");
  };
  std::vector<Edge> e;
  if (kind == "cycle") {
    need(1, 3);
    for (std::size_t i = 1; i < p[0]; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, p[0]);
    return Graph(p[0], e);
  }
  if (kind == "path") {
    need(1, 2);
    for (std::size_t i = 1; i < p[0]; ++i) e.emplace_back(i, i + 1);
    return Graph(p[0], e);
  }
  if (kind == "complete") {
    need(1, 2);
    for (std::size_t i = 1; i <= p[0]; ++i)
      for (std::size_t j = i + 1; j <= p[0]; ++j) e.emplace_back(i, j);
    return Graph(p[0], e);
  }
  if (kind == "complete_bipartite") {
    need(2, 1);
    for (std::size_t i = 1; i <= p[0]; ++i)
      for (std::size_t j = 1; j <= p[1]; ++j) e.emplace_back(i, p[0] + j);
    return Graph(p[0] + p[1], e);
  }
  if (kind == "bowtie") {
    need(0, 0);
    return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  }
  if (kind == "bridged_triangles") {
    need(0, 0);
    return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}});
  }
  throw Error(ErrorCode::kBadParams, "unknown graph family '" + std::string(kind) + "'");
}

bool is_family_spec(std::string_view spec) {
  const auto kind = spec.substr(0, spec.find(':'));
  return kind == "cycle" || kind == "path" || kind == "complete" || kind == "complete_bipartite" ||
         kind == "bowtie" || kind == "bridged_triangles";
}

Graph parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  std::vector<std::size_t> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      std::size_t x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::kBadParams, "bad parameter in '" + std::string(spec) + "'");
      params.push_back(x);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return family(kind, params);
}

namespace {

using Adj = std::vector<std::uint32_t>;  // bit masks, 0-indexed

std::uint64_t code_under(const Adj& adj, const std::vector<std::size_t>& perm) {
  // perm[new] = old
  const std::size_t n = adj.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1u);
  return code;
}

// Minimum code over relabellings that keep vertices sorted by a refined
// degree invariant; any isomorphism maps invariant classes onto each other.
std::uint64_t canonical_code(const Adj& adj) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> key{static_cast<int>(__builtin_popcount(adj[v]))};
    std::vector<int> nd;
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v] >> w & 1) nd.push_back(__builtin_popcount(adj[w]));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> perm(n);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && keyed[j].first == keyed[i].first) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  for (std::size_t i = 0; i < n; ++i) perm[i] = keyed[i].second;
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      best = std::min(best, code_under(adj, perm));
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0 || n > 8) throw Error(ErrorCode::kBadParams, "connected_graphs supports 1..8 vertices");
  // Every connected graph has a vertex whose removal keeps it connected, so
  // extending connected graphs on n-1 vertices reaches all of them.
  std::map<std::uint64_t, Adj> level{{0, Adj(1, 0)}};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::uint64_t, Adj> next;
    for (const auto& [code, adj] : level) {
      for (std::uint32_t nb = 1; nb < (1u << (k - 1)); ++nb) {
        Adj grown = adj;
        grown.push_back(nb);
        for (std::size_t v = 0; v + 1 < k; ++v)
          if (nb >> v & 1) grown[v] |= 1u << (k - 1);
        next.emplace(canonical_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& [code, adj] : level) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (adj[i] >> j & 1) edges.emplace_back(i + 1, j + 1);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

std::string to_string(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edges().size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace nefcert
