#include "nefcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "nefcert/certify.hpp"
#include "nefcert/config.hpp"
#include "nefcert/corpus.hpp"
#include "nefcert/error.hpp"
#include "nefcert/polytope.hpp"
#include "nefcert/textio.hpp"
#include "nefcert/toric.hpp"

namespace nefcert::cli {

using json = nlohmann::ordered_json;

namespace {

struct Settings {
  std::string format = "text";
  std::string seed_dir;

  std::string matrix_file;

  std::string polytope_file;
  bool hstar = false, reflexive = false, gorenstein = false, spanning = false;

  std::string gb_file;
  std::string gb_mode;

  std::string certify_kind;
  std::string certify_input;
  std::int64_t k_max = 3;
  std::size_t cycle_cap = 0;
  bool all_translates = false;
  bool all_corpus = false;
  bool timings = false;

  std::string graph_spec;
};

std::string join(const Polynomial& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? " " : "") + std::to_string(h[i]);
  return s;
}

json poly_json(const Polynomial& h) {
  json a = json::array();
  for (auto c : h) a.push_back(std::to_string(c));
  return a;
}

Graph load_graph(const std::string& input) {
  if (is_family_spec(input)) return parse_family(input);
  return parse_graph(read_text_file(input));
}

int cmd_analyze(const Settings& s, std::ostream& out) {
  const IntMatrix m = parse_matrix(read_text_file(s.matrix_file));
  json j;
  j["rows"] = std::to_string(m.rows());
  j["cols"] = std::to_string(m.cols());
  j["rank"] = std::to_string(rank(m));
  j["repeated_columns"] = has_repeated_columns(m);
  try {
    const Configuration c = as_configuration(m);
    json w = json::array();
    for (const auto& x : c.witness()) w.push_back(x.get_str());
    j["configuration"] = true;
    j["witness"] = w;
  } catch (const Error& e) {
    j["configuration"] = false;
    j["reason"] = e.what();
  }
  std::map<Int, std::size_t> profile;
  for (const auto& v : maximal_minor_profile(m)) ++profile[v];
  json prof = json::object();
  for (const auto& [v, count] : profile) prof[v.get_str()] = std::to_string(count);
  j["unimodular"] = is_unimodular(m);
  j["minor_profile"] = prof;
  if (s.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "shape: " << m.rows() << " x " << m.cols() << "\n";
  out << "rank: " << rank(m) << "\n";
  out << "repeated columns: " << (j["repeated_columns"].get<bool>() ? "yes" : "no") << "\n";
  if (j["configuration"].get<bool>()) {
    out << "configuration: yes, witness c =";
    for (const auto& x : j["witness"]) out << " " << x.get<std::string>();
    out << "\n";
  } else {
    out << "configuration: no (" << j["reason"].get<std::string>() << ")\n";
  }
  out << "unimodular: " << (j["unimodular"].get<bool>() ? "yes" : "no") << "\n";
  out << "maximal minors (|value|: count):";
  for (const auto& [v, count] : profile) out << " " << v.get_str() << ":" << count;
  out << "\n";
  return 0;
}

int cmd_polytope(const Settings& s, std::ostream& out) {
  const LatticePolytope p = parse_polytope(read_text_file(s.polytope_file));
  std::vector<std::pair<std::string, std::string>> lines;
  json j;
  const bool any = s.hstar || s.reflexive || s.gorenstein || s.spanning;
  if (!any) {
    j["ambient_dim"] = std::to_string(p.ambient_dim());
    j["dim"] = std::to_string(p.dim());
    j["vertices"] = std::to_string(p.vertices().size());
    j["facets"] = std::to_string(p.model_facets().size());
    j["lattice_points"] = std::to_string(p.lattice_points().size());
    lines = {{"ambient dim", std::to_string(p.ambient_dim())},
             {"dim", std::to_string(p.dim())},
             {"vertices", std::to_string(p.vertices().size())},
             {"facets", std::to_string(p.model_facets().size())},
             {"lattice points", std::to_string(p.lattice_points().size())}};
  }
  if (s.hstar || !any) {
    const Polynomial h = h_star(p);
    j["h_star"] = poly_json(h);
    lines.emplace_back("hstar", join(h));
  }
  if (s.reflexive) {
    const auto c = reflexive_center(p);
    j["reflexive"] = c.has_value();
    lines.emplace_back("reflexive", c ? "yes" : "no");
  }
  if (s.gorenstein) {
    const auto r = gorenstein_index(p);
    j["gorenstein_index"] = r ? json(std::to_string(*r)) : json(nullptr);
    lines.emplace_back("gorenstein", r ? std::to_string(*r) : "none");
  }
  if (s.spanning) {
    const bool sp = is_spanning(p);
    j["spanning"] = sp;
    lines.emplace_back("spanning", sp ? "yes" : "no");
  }
  if (s.format == "json") {
    out << j.dump(2) << "\n";
  } else if (lines.size() == 1) {
    out << lines.front().second << "\n";
  } else {
    for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
  }
  return 0;
}

int cmd_gb(const Settings& s, std::ostream& out) {
  const Configuration a = as_configuration(parse_matrix(read_text_file(s.gb_file)));
  const ConformanceReport pm = conform_pm(a);
  const ConformanceReport r = s.gb_mode == "pm" ? pm : s.gb_mode == "cayley" ? conform_cayley(a, pm) : conform_azero(a, pm);
  const auto xy = xy_names(a.size());
  if (s.format == "json") {
    json j;
    j["mode"] = std::string(to_string(r.mode));
    json order = json::array();
    for (auto v : r.basis.order.ranking()) order.push_back(r.variable_names[v]);
    j["order"] = order;
    json el = json::array();
    for (const auto& b : r.basis.elements) el.push_back(to_string(b, r.variable_names));
    j["elements"] = el;
    json g = json::array();
    for (const auto& b : r.g) g.push_back(to_string(b, xy));
    j["g"] = g;
    j["s"] = std::to_string(r.s());
    j["initial_ideal_squarefree"] = is_squarefree(initial_ideal(r.basis));
    j["conforms"] = r.conforms;
    j["failures"] = r.failures;
    out << j.dump(2) << "\n";
  } else {
    out << "# mode " << to_string(r.mode) << ", order";
    for (auto v : r.basis.order.ranking()) out << " " << r.variable_names[v];
    out << "\n# " << r.basis.elements.size() << " elements, s = " << r.s()
        << ", conforms: " << (r.conforms ? "yes" : "no") << "\n";
    for (const auto& f : r.failures) out << "# failure: " << f << "\n";
    for (const auto& b : r.basis.elements) out << to_string(b, r.variable_names) << "\n";
  }
  return r.conforms ? 0 : 3;
}

int cmd_graph(const Settings& s, std::ostream& out) {
  const Graph g = load_graph(s.graph_spec);
  const std::size_t cap = s.cycle_cap ? s.cycle_cap : default_cycle_cap();
  json j;
  j["vertices"] = std::to_string(g.vertex_count());
  j["edges"] = std::to_string(g.edges().size());
  j["connected"] = is_connected(g);
  j["bipartite"] = is_bipartite(g);
  j["odd_cycles"] = std::to_string(odd_cycles(g, cap).size());
  j["odd_cycle_condition"] = odd_cycles_pairwise_intersect(g, cap);
  if (is_connected(g)) j["edge_polytope_dim"] = std::to_string(edge_polytope_dim(g));
  if (!g.edges().empty()) {
    const ReducedEdgeMatrix red = reduced_edge_configuration(g);
    j["unimodular"] = is_unimodular(red.configuration.matrix());
    j["deleted_row"] = red.deleted_vertex ? json(std::to_string(*red.deleted_vertex)) : json(nullptr);
    j["matrix"] = to_string(red.configuration.matrix());
  }
  if (s.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "matrix") {
      out << "edge matrix" << (j["deleted_row"].is_null() ? "" : " (row " + j["deleted_row"].get<std::string>() + " deleted)")
          << ":\n"
          << v.get<std::string>();
    } else if (k != "deleted_row") {
      out << k << ": " << (v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : v.get<std::string>()) << "\n";
    }
  }
  return 0;
}

CertificateReport certify_one(const std::string& kind, const CorpusEntry* entry, const std::string& input,
                              const CertifyOptions& opt) {
  if (kind == "edge") {
    if (entry) {
      if (!entry->graph) throw Error(ErrorCode::kBadParams, entry->name + " is not a graph");
      return certify_edge(*entry->graph, opt);
    }
    return certify_edge(load_graph(input), opt);
  }
  const IntMatrix m = entry                   ? entry->matrix
                      : is_family_spec(input) ? reduced_edge_configuration(parse_family(input)).configuration.matrix()
                                              : parse_matrix(read_text_file(input));
  if (kind == "main1") return certify_main1(m, opt);
  if (kind == "main2") return certify_main2(m, opt);
  if (kind == "corollary") return certify_corollary(m, opt);
  return certify_proof_identities(m, opt);
}

int cmd_certify(const Settings& s, std::ostream& out, std::ostream& err) {
  CertifyOptions opt;
  opt.k_max = s.k_max;
  opt.cycle_cap = s.cycle_cap;
  opt.all_translates = s.all_translates;

  auto emit = [&](const std::string& name, const CertificateReport& r) {
    if (s.format == "json") {
      json j = to_json(r, s.timings);
      if (!name.empty()) j["instance"]["description"] = name + ": " + r.instance.description;
      out << j.dump(2) << "\n";
    } else {
      if (!name.empty()) out << "== " << name << "\n";
      out << to_text(r, s.timings);
    }
  };

  if (!s.all_corpus) {
    if (s.certify_input.empty()) throw CLI::RequiredError("input");
    const CertificateReport r = certify_one(s.certify_kind, nullptr, s.certify_input, opt);
    emit("", r);
    return exit_code(r.verdict);
  }

  std::vector<CorpusEntry> entries;
  for (auto& e : builtin_corpus())
    if (s.certify_kind != "edge" || e.graph) entries.push_back(std::move(e));
  std::vector<std::optional<CertificateReport>> reports(entries.size());
  std::vector<std::string> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < entries.size();) {
      try {
        reports[k] = certify_one(s.certify_kind, &entries[k], "", opt);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const std::size_t threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int code = 0;
  auto rank_of = [](int c) { return c == 3 ? 3 : c == 1 ? 2 : c == 2 ? 1 : 0; };
  for (std::size_t k = 0; k < entries.size(); ++k) {
    int c = 1;
    if (reports[k]) {
      emit(entries[k].name, *reports[k]);
      c = exit_code(reports[k]->verdict);
    } else {
      err << entries[k].name << ": " << errors[k] << "\n";
    }
    if (rank_of(c) > rank_of(code)) code = c;
  }
  return code;
}

int seed_corpus(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw Error(ErrorCode::kParse, "cannot write " + (fs::path(dir) / name).string());
    f << text;
    out << (fs::path(dir) / name).string() << "\n";
  };
  for (const auto& e : builtin_corpus()) {
    write(e.name + ".mat", to_string(e.matrix));
    if (e.graph) write(e.name + ".graph", to_string(*e.graph));
  }
  write("reeve_3.poly", reeve_polytope_text(3));
  write("hexagon.poly", "dim 2\n1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact certification of Groebner-basis and reflexivity statements for unimodular configurations"};
  app.name(args.empty() ? "nefcert" : args.front());
  app.require_subcommand(0, 1);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed-corpus", s.seed_dir, "Write the built-in corpus as input files into this directory");

  auto* analyze = app.add_subcommand("analyze", "Inspect a matrix");
  analyze->fallthrough();
  analyze->add_subcommand("matrix", "Configuration, rank and maximal-minor profile")
      ->fallthrough()
      ->add_option("file", s.matrix_file, "Matrix file")
      ->required();
  analyze->require_subcommand(1);

  auto* poly = app.add_subcommand("polytope", "Lattice polytope data");
  poly->fallthrough();
  poly->add_option("file", s.polytope_file, "Polytope or matrix file")->required();
  poly->add_flag("--hstar", s.hstar, "h*-polynomial, low degree first");
  poly->add_flag("--reflexive", s.reflexive, "Reflexivity after translating the interior point to 0");
  poly->add_flag("--gorenstein", s.gorenstein, "Gorenstein index from h*");
  poly->add_flag("--spanning", s.spanning, "Whether the lattice points span the affine lattice");

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis with its structure check");
  gb->fallthrough();
  gb->add_option("file", s.gb_file, "Matrix file")->required();
  gb->add_option("--mode", s.gb_mode, "pm, cayley or azero")->required()->check(CLI::IsMember({"pm", "cayley", "azero"}));

  auto* cert = app.add_subcommand("certify", "Run a certification pipeline");
  cert->fallthrough();
  cert->add_option("kind", s.certify_kind, "main1, main2, corollary, edge or identities")
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "corollary", "edge", "identities"}));
  cert->add_option("input", s.certify_input, "Matrix file, graph file or family shorthand such as cycle:4");
  cert->add_option("--k-max", s.k_max, "Bound for the recorded IDP check")->check(CLI::PositiveNumber);
  cert->add_option("--cycle-cap", s.cycle_cap, "Odd-cycle enumeration budget (default NEFCERT_CYCLE_CAP or 10000)");
  cert->add_flag("--all-translates", s.all_translates, "Check the nef-partition for every lattice point a");
  cert->add_flag("--all-corpus", s.all_corpus, "Run over the built-in corpus");
  cert->add_flag("--timings", s.timings, "Include per-stage timings");

  auto* graph = app.add_subcommand("graph", "Graph data: bipartiteness, odd cycles, edge matrix");
  graph->fallthrough();
  graph->add_option("spec", s.graph_spec, "Family shorthand (cycle:5, bowtie, ...) or graph file")->required();
  graph->add_option("--cycle-cap", s.cycle_cap, "Odd-cycle enumeration budget");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!s.seed_dir.empty()) return seed_corpus(s.seed_dir, out);
    if (*analyze) return cmd_analyze(s, out);
    if (*poly) return cmd_polytope(s, out);
    if (*gb) return cmd_gb(s, out);
    if (*cert) return cmd_certify(s, out, err);
    if (*graph) return cmd_graph(s, out);
    err << app.help();
    return 1;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nefcert::cli
