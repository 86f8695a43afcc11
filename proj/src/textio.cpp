#include "nefcert/textio.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "nefcert/error.hpp"

namespace nefcert {
namespace {

// Whitespace-separated tokens of the non-comment lines.
std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

Int parse_int(const std::string& tok) {
  Int x;
  const bool sign = !tok.empty() && (tok[0] == '-' || tok[0] == '+');
  if (tok.size() == (sign ? 1u : 0u) || tok.find_first_not_of("0123456789", sign ? 1 : 0) != std::string::npos)
    throw Error(ErrorCode::kParse, "not an integer: '" + tok + "'");
  x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10);
  return x;
}

std::size_t parse_count(const std::string& tok) {
  const Int x = parse_int(tok);
  if (x < 0 || !x.fits_ulong_p()) throw Error(ErrorCode::kParse, "bad count '" + tok + "'");
  return x.get_ui();
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  const auto t = tokens(text);
  if (t.size() < 2) throw Error(ErrorCode::kParse, "matrix header \"d n\" missing");
  const std::size_t d = parse_count(t[0]), n = parse_count(t[1]);
  if (t.size() != 2 + d * n)
    throw Error(ErrorCode::kParse, "expected " + std::to_string(d * n) + " entries, found " + std::to_string(t.size() - 2));
  IntMatrix m(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_int(t[2 + i * n + j]);
  return m;
}

LatticePolytope parse_polytope(std::string_view text) {
  const auto t = tokens(text);
  if (t.empty()) throw Error(ErrorCode::kParse, "empty polytope file");
  if (t[0] != "dim") return polytope_from_columns(parse_matrix(text));
  if (t.size() < 2) throw Error(ErrorCode::kParse, "\"dim d\" header incomplete");
  const std::size_t d = parse_count(t[1]);
  const std::size_t rest = t.size() - 2;
  if (d == 0 || rest % d != 0) throw Error(ErrorCode::kParse, "vertex coordinates do not match dim");
  std::vector<Point> pts;
  for (std::size_t k = 0; k < rest / d; ++k) {
    IntVector v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(parse_int(t[2 + k * d + i]));
    pts.push_back(to_point(v));
  }
  return LatticePolytope(d, std::move(pts));
}

Graph parse_graph(std::string_view text) {
  const auto t = tokens(text);
  if (t.size() < 2) throw Error(ErrorCode::kParse, "graph header \"d m\" missing");
  const std::size_t d = parse_count(t[0]), m = parse_count(t[1]);
  if (t.size() != 2 + 2 * m) throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < m; ++k) edges.emplace_back(parse_count(t[2 + 2 * k]), parse_count(t[3 + 2 * k]));
  return Graph(d, std::move(edges));
}

std::string format_polytope(const LatticePolytope& p) {
  std::string out = "dim " + std::to_string(p.ambient_dim()) + "\n";
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    out += "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nefcert
