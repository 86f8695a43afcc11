#include "nefcert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "nefcert/config.hpp"
#include "nefcert/error.hpp"
#include "nefcert/polytope.hpp"
#include "nefcert/toric.hpp"

namespace nefcert {

using json = nlohmann::ordered_json;

namespace {

json poly_json(const Polynomial& h) {
  json a = json::array();
  for (auto c : h) a.push_back(std::to_string(c));
  return a;
}

json point_json(const Point& p) {
  json a = json::array();
  for (auto c : p) a.push_back(std::to_string(c));
  return a;
}

json int_json(std::size_t x) { return std::to_string(x); }

json binomials_json(const std::vector<Binomial>& bs, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& b : bs) a.push_back(to_string(b, names));
  return a;
}

Status pass_if(bool ok) { return ok ? Status::kPass : Status::kFail; }

class Stage {
 public:
  Stage(CertificateReport& r, std::string name)
      : r_(r), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~Stage() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    r_.timings_ms.emplace_back(name_, static_cast<std::int64_t>(ms.count()));
  }

 private:
  CertificateReport& r_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Point> sorted_columns(const IntMatrix& m) {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(to_point(m.column(j)));
  std::sort(pts.begin(), pts.end());
  return pts;
}

Instance matrix_instance(const IntMatrix& a) {
  Instance in;
  in.kind = "matrix";
  in.description = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix";
  in.matrix = a;
  return in;
}

// Configuration and unimodularity, shared by all matrix pipelines. Returns
// the configuration when both pass.
std::optional<Configuration> base_hypotheses(CertificateReport& r, const IntMatrix& a) {
  Check conf{"configuration", Status::kFail, json::object()};
  std::optional<Configuration> c;
  try {
    c = as_configuration(a);
    json w = json::array();
    for (const auto& x : c->witness()) w.push_back(x.get_str());
    conf.status = Status::kPass;
    conf.data["witness"] = w;
  } catch (const Error& e) {
    conf.data["error"] = e.what();
  }
  r.hypotheses.push_back(conf);

  Check uni{"unimodular", Status::kSkipped, json::object()};
  if (c) {
    std::set<Int> distinct;
    for (const auto& v : maximal_minor_profile(a)) distinct.insert(v);
    json prof = json::array();
    for (const auto& v : distinct) prof.push_back(v.get_str());
    const bool ok = rank(a) == a.rows() && distinct.size() <= 1;
    uni.status = pass_if(ok);
    uni.data["rank"] = int_json(rank(a));
    uni.data["minor_values"] = prof;
  }
  r.hypotheses.push_back(uni);
  return uni.status == Status::kPass ? c : std::nullopt;
}

void lattice_hypotheses(CertificateReport& r, const LatticePolytope& p, const IntMatrix& columns,
                        const std::string& name) {
  const auto& pts = p.lattice_points();
  const bool equal = pts == sorted_columns(columns);
  Check lp{"lattice_points_equal_columns", pass_if(equal), json::object()};
  lp.data["polytope"] = name;
  lp.data["lattice_points"] = int_json(pts.size());
  lp.data["columns"] = int_json(columns.cols());
  r.hypotheses.push_back(lp);

  Check sp{"spanning", pass_if(is_spanning(p)), json::object()};
  sp.data["polytope"] = name;
  sp.data["dim"] = int_json(p.dim());
  r.hypotheses.push_back(sp);
}

bool hypotheses_hold(const CertificateReport& r) {
  return std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                     [](const Check& c) { return c.status == Status::kPass; });
}

struct CayleyOutcome {
  bool squarefree = false;
  std::optional<SimplicialComplex> complex;
};

// Clauses (1)-(3) and the h-chain for P and its Groebner data.
void theorem_clauses(CertificateReport& r, const std::string& prefix, const LatticePolytope& p,
                     const ConformanceReport& gb, bool origin_partition, const CertifyOptions& opt) {
  const LatticePolytope minus = negate(p);
  const std::vector<LatticePolytope> pair{p, minus};
  const LatticePolytope cay = cayley_sum(pair);
  CayleyOutcome outcome;
  Polynomial cay_h;

  {
    Stage t(r, prefix + "(1)");
    Check c{prefix + "(1)", Status::kFail, json::object()};
    cay_h = h_star(cay);
    const auto index = gorenstein_index(cay);
    const MonomialIdeal in = initial_ideal(gb.basis);
    outcome.squarefree = is_squarefree(in);
    bool tri = false;
    if (outcome.squarefree) {
      outcome.complex = stanley_reisner(in, gb.basis.variable_count());
      tri = triangulation_unimodular(*outcome.complex, gb.matrix);
    }
    const auto center2 = reflexive_center(scale(cay, 2));
    const bool ok = index == 2 && gb.conforms && outcome.squarefree && tri && center2.has_value();
    c.status = pass_if(ok);
    c.data["cayley_dim"] = int_json(cay.dim());
    c.data["h_star"] = poly_json(cay_h);
    c.data["gorenstein_index"] = index ? json(std::to_string(*index)) : json(nullptr);
    c.data["gb_mode"] = std::string(to_string(gb.mode));
    c.data["gb_size"] = int_json(gb.basis.elements.size());
    c.data["s"] = int_json(gb.s());
    c.data["gb_conforms"] = gb.conforms;
    if (!gb.failures.empty()) c.data["gb_failures"] = gb.failures;
    c.data["g"] = binomials_json(gb.g, xy_names(gb.g.empty() ? 0 : gb.g.front().plus.size() / 2));
    c.data["initial_ideal_squarefree"] = outcome.squarefree;
    c.data["triangulation_facets"] = outcome.complex ? int_json(outcome.complex->facets.size()) : json(nullptr);
    c.data["triangulation_unimodular"] = tri;
    c.data["regularity"] = "by construction: initial ideal of a term order";
    c.data["index2_reflexive_center"] = center2 ? point_json(*center2) : json(nullptr);
    r.clauses.push_back(c);
  }

  const LatticePolytope sum = minkowski_sum(p, minus);
  {
    Stage t(r, prefix + "(2)");
    Check c{prefix + "(2)", Status::kFail, json::object()};
    const auto center = reflexive_center(sum);
    const bool at_origin = center && std::all_of(center->begin(), center->end(), [](auto x) { return x == 0; });
    c.data["sum_vertices"] = int_json(sum.vertices().size());
    c.data["sum_lattice_points"] = int_json(sum.lattice_points().size());
    c.data["sum_facets"] = int_json(sum.model_facets().size());
    c.data["sum_h_star"] = poly_json(h_star(sum));
    c.data["reflexive"] = center.has_value();
    c.data["interior_point"] = center ? point_json(*center) : json(nullptr);

    // Nef-partition (P - a) + (-P + a): translation does not move the sum,
    // so one representative a plus the reflexivity check certifies it.
    std::vector<Point> translations;
    if (origin_partition) {
      translations.push_back(Point(p.ambient_dim(), 0));
    } else if (opt.all_translates) {
      translations = p.lattice_points();
    } else {
      translations.push_back(p.lattice_points().front());
    }
    bool nef = at_origin;
    for (const auto& a : translations) {
      Point neg_a = a;
      for (auto& x : neg_a) x = -x;
      const LatticePolytope p1 = translate(p, neg_a);
      const LatticePolytope p2 = translate(minus, a);
      const Point zero(p.ambient_dim(), 0);
      const auto c2 = reflexive_center(minkowski_sum(p1, p2));
      nef = nef && p1.contains(zero) && p2.contains(zero) && c2 && *c2 == zero;
    }
    c.data["nef_partition"] = origin_partition ? json::array({"P", "-P"}) : json::array({"P - a", "-P + a"});
    c.data["translations_checked"] = int_json(translations.size());
    c.data["translation_a"] = point_json(translations.front());
    c.data["cayley_initial_ideal_squarefree"] = outcome.squarefree;
    c.status = pass_if(at_origin && nef && outcome.squarefree);
    r.clauses.push_back(c);
  }

  {
    // The sum's own toric ideal under grevlex with the origin smallest.
    Stage t(r, prefix + "(2)/sum-triangulation");
    Check c{prefix + "(2)/sum-triangulation", Status::kSkipped, json::object()};
    const auto& pts = sum.lattice_points();
    c.data["lattice_points"] = int_json(pts.size());
    if (pts.size() <= opt.sum_gb_max_points) {
      std::vector<IntVector> cols;
      std::size_t origin = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        cols.push_back(to_int_vector(pts[i]));
        if (std::all_of(pts[i].begin(), pts[i].end(), [](auto x) { return x == 0; })) origin = i;
      }
      const IntMatrix m = homogenize(cols);
      const GroebnerBasis g = buchberger_reduced(toric_ideal(m), TermOrder::with_smallest(pts.size(), origin));
      const MonomialIdeal in = initial_ideal(g);
      const bool sq = is_squarefree(in);
      bool tri = false;
      if (sq) {
        const SimplicialComplex k = stanley_reisner(in, pts.size());
        tri = triangulation_unimodular(k, m);
        c.data["h_polynomial"] = poly_json(h_polynomial(k));
      }
      c.data["term_order"] = "grevlex, origin smallest, then lattice points in lexicographic order";
      c.data["gb_size"] = int_json(g.elements.size());
      c.data["initial_ideal_squarefree"] = sq;
      c.data["triangulation_unimodular"] = tri;
      if (sq && tri)
        c.status = Status::kPass;
      else
        c.status = outcome.squarefree ? Status::kPartial : Status::kFail;
    } else {
      c.data["reason"] = "more lattice points than sum_gb_max_points";
    }
    r.clauses.push_back(c);
  }

  {
    Stage t(r, prefix + "(3)");
    Check c{prefix + "(3)", Status::kFail, json::object()};
    const bool ok = check_oda(p, minus);
    c.status = pass_if(ok);
    c.data["p_lattice_points"] = int_json(p.lattice_points().size());
    c.data["sum_lattice_points"] = int_json(sum.lattice_points().size());
    r.clauses.push_back(c);
  }

  {
    Stage t(r, prefix + "/h-chain");
    Check c{prefix + "/h-chain", Status::kSkipped, json::object()};
    const IdpCheck idp = idp_check(cay, opt.k_max);
    c.data["idp_k_max"] = std::to_string(idp.k_max);
    c.data["idp_bounded_check"] = idp.holds;
    c.data["h_star"] = poly_json(cay_h);
    if (outcome.complex) {
      const Polynomial h = h_polynomial(*outcome.complex);
      c.data["h_polynomial"] = poly_json(h);
      c.status = pass_if(h == cay_h && idp.holds);
    }
    r.clauses.push_back(c);
  }
}

CertificateReport run_main1(const IntMatrix& a, const CertifyOptions& opt) {
  CertificateReport r;
  r.pipeline = "main1";
  r.instance = matrix_instance(a);
  const auto conf = base_hypotheses(r, a);
  if (conf) {
    Stage t(r, "hypotheses");
    lattice_hypotheses(r, polytope_from_columns(a), a, "P_A");
  }
  if (!hypotheses_hold(r)) {
    r.settle();
    return r;
  }
  const ConformanceReport pm = [&] {
    Stage t(r, "gb-pm");
    return conform_pm(*conf);
  }();
  const ConformanceReport cay = [&] {
    Stage t(r, "gb-cayley");
    return conform_cayley(*conf, pm);
  }();
  theorem_clauses(r, "main1", polytope_from_columns(a), cay, false, opt);
  r.settle();
  return r;
}

CertificateReport run_main2(const IntMatrix& a, const CertifyOptions& opt) {
  CertificateReport r;
  r.pipeline = "main2";
  r.instance = matrix_instance(a);
  const auto conf = base_hypotheses(r, a);
  if (conf) {
    Stage t(r, "hypotheses");
    const IntMatrix a0 = append_origin(*conf);
    lattice_hypotheses(r, polytope_from_columns(a0), a0, "P_{A_0}");
  }
  if (!hypotheses_hold(r)) {
    r.settle();
    return r;
  }
  const IntMatrix a0 = append_origin(*conf);
  const ConformanceReport pm = [&] {
    Stage t(r, "gb-pm");
    return conform_pm(*conf);
  }();
  const ConformanceReport az = [&] {
    Stage t(r, "gb-azero");
    return conform_azero(*conf, pm);
  }();
  theorem_clauses(r, "main2", polytope_from_columns(a0), az, true, opt);
  r.settle();
  return r;
}

void append_prefixed(CertificateReport& into, const CertificateReport& from, const std::string& prefix) {
  for (auto c : from.hypotheses) {
    c.id = prefix + c.id;
    into.hypotheses.push_back(std::move(c));
  }
  for (auto c : from.clauses) {
    c.id = prefix + c.id;
    into.clauses.push_back(std::move(c));
  }
  for (auto [name, ms] : from.timings_ms) into.timings_ms.emplace_back(prefix + name, ms);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kPartial: return "PARTIAL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kHypothesisNotMet: return "HYPOTHESIS_NOT_MET";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return 0;
    case Verdict::kHypothesisNotMet: return 2;
    case Verdict::kDiscrepancy: return 3;
  }
  return 1;
}

std::string Instance::hash() const {
  std::string text = kind + "\n";
  if (matrix) text += to_string(*matrix);
  if (graph) text += to_string(*graph);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

void CertificateReport::settle() {
  auto failed = [](const std::vector<Check>& v) {
    return std::any_of(v.begin(), v.end(), [](const Check& c) { return c.status == Status::kFail; });
  };
  if (failed(hypotheses))
    verdict = Verdict::kHypothesisNotMet;
  else if (failed(clauses))
    verdict = Verdict::kDiscrepancy;
  else
    verdict = Verdict::kConfirmed;
}

CertificateReport certify_main1(const IntMatrix& a, const CertifyOptions& opt) { return run_main1(a, opt); }

CertificateReport certify_main2(const IntMatrix& a, const CertifyOptions& opt) { return run_main2(a, opt); }

CertificateReport certify_corollary(const IntMatrix& a, const CertifyOptions&) {
  CertificateReport r;
  r.pipeline = "corollary";
  r.instance = matrix_instance(a);
  const auto conf = base_hypotheses(r, a);
  if (conf) {
    Stage t(r, "hypotheses");
    lattice_hypotheses(r, polytope_from_columns(a), a, "P_A");
    const IntMatrix a0 = append_origin(*conf);
    lattice_hypotheses(r, polytope_from_columns(a0), a0, "P_{A_0}");
  }
  if (!hypotheses_hold(r)) {
    r.settle();
    return r;
  }
  Stage t(r, "corollary");
  const LatticePolytope p = polytope_from_columns(a);
  const LatticePolytope p0 = polytope_from_columns(append_origin(*conf));
  const std::vector<LatticePolytope> pair{p, negate(p)};
  const std::vector<LatticePolytope> pair0{p0, negate(p0)};
  const Polynomial h = h_star(cayley_sum(pair));
  const Polynomial h0 = h_star(cayley_sum(pair0));
  const Polynomial rhs = multiply({1, 1}, h);
  Check c{"corollary", pass_if(h0 == rhs), json::object()};
  c.data["h_star_origin_cayley"] = poly_json(h0);
  c.data["h_star_cayley"] = poly_json(h);
  c.data["one_plus_t_times_h_star_cayley"] = poly_json(rhs);
  r.clauses.push_back(c);
  r.settle();
  return r;
}

CertificateReport certify_proof_identities(const IntMatrix& a, const CertifyOptions&) {
  CertificateReport r;
  r.pipeline = "identities";
  r.instance = matrix_instance(a);
  const auto conf = base_hypotheses(r, a);
  if (conf) lattice_hypotheses(r, polytope_from_columns(a), a, "P_A");
  if (!hypotheses_hold(r)) {
    r.settle();
    return r;
  }
  Stage t(r, "identities");
  const ConformanceReport pm = conform_pm(*conf);
  const ConformanceReport cay = conform_cayley(*conf, pm);
  const MonomialIdeal in_pm = initial_ideal(pm.basis);
  const MonomialIdeal in_cay = initial_ideal(cay.basis);
  if (!is_squarefree(in_pm) || !is_squarefree(in_cay)) {
    Check c{"identities/pm-cayley", Status::kFail, json::object()};
    c.data["pm_initial_ideal_squarefree"] = is_squarefree(in_pm);
    c.data["cayley_initial_ideal_squarefree"] = is_squarefree(in_cay);
    r.clauses.push_back(c);
    r.settle();
    return r;
  }
  const Polynomial h_pm = h_polynomial(stanley_reisner(in_pm, pm.basis.variable_count()));
  const Polynomial h_cay = h_polynomial(stanley_reisner(in_cay, cay.basis.variable_count()));
  const Polynomial lifted = multiply({1, 1}, h_cay);

  Check c1{"identities/pm-cayley", pass_if(h_pm == lifted), json::object()};
  c1.data["h_pm"] = poly_json(h_pm);
  c1.data["h_cayley"] = poly_json(h_cay);
  c1.data["one_plus_t_times_h_cayley"] = poly_json(lifted);
  r.clauses.push_back(c1);

  // conv(±a_i, 0) in R^d.
  std::vector<Point> pts{Point(a.rows(), 0)};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Point v = to_point(a.column(j));
    pts.push_back(v);
    for (auto& x : v) x = -x;
    pts.push_back(v);
  }
  const LatticePolytope body(a.rows(), pts);
  const Polynomial hs_gen = h_star_generated(body);
  Check c2{"identities/pm-polytope", pass_if(h_pm == hs_gen), json::object()};
  c2.data["h_pm"] = poly_json(h_pm);
  c2.data["h_star_generated_lattice"] = poly_json(hs_gen);
  c2.data["h_star_ambient_lattice"] = poly_json(h_star(body));
  c2.data["body_spanning"] = is_spanning(body);
  r.clauses.push_back(c2);

  const bool pal = is_palindromic(h_pm);
  Check c3{"identities/palindromic", pass_if(pal && degree(h_pm) == a.rows()), json::object()};
  c3.data["h_pm"] = poly_json(h_pm);
  c3.data["degree"] = int_json(degree(h_pm));
  c3.data["d"] = int_json(a.rows());
  c3.data["palindromic"] = pal;
  r.clauses.push_back(c3);
  r.settle();
  return r;
}

CertificateReport certify_edge(const Graph& g, const CertifyOptions& opt) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
  CertificateReport r;
  r.pipeline = "edge";
  r.instance.kind = "graph";
  r.instance.description = std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edges().size()) + " edges";
  r.instance.graph = g;

  const std::size_t cap = opt.cycle_cap ? opt.cycle_cap : default_cycle_cap();
  const bool bip = is_bipartite(g);
  const bool condition = odd_cycles_pairwise_intersect(g, cap);
  const ReducedEdgeMatrix red = reduced_edge_configuration(g);
  const IntMatrix& a = red.configuration.matrix();

  Check conn{"connected", Status::kPass, json::object()};
  conn.data["bipartite"] = bip;
  conn.data["edge_polytope_dim"] = int_json(edge_polytope_dim(g));
  r.hypotheses.push_back(conn);

  Check cond{"odd_cycle_condition", pass_if(condition), json::object()};
  if (!bip) cond.data["odd_cycles"] = int_json(odd_cycles(g, cap).size());
  r.hypotheses.push_back(cond);

  // The odd-cycle condition and unimodularity of the (row-reduced) edge
  // matrix must agree whether or not a theorem applies.
  std::set<Int> distinct;
  for (const auto& v : maximal_minor_profile(a)) distinct.insert(v);
  const bool uni = rank(a) == a.rows() && distinct.size() <= 1;
  Check cls{"edge/classification", pass_if(uni == condition), json::object()};
  json prof = json::array(), norm = json::array();
  Int gcd_all = 0;
  for (const auto& v : distinct) gcd_all = gcd(gcd_all, v);
  for (const auto& v : distinct) {
    prof.push_back(v.get_str());
    norm.push_back(Int(v / gcd_all).get_str());
  }
  cls.data["unimodular"] = uni;
  cls.data["odd_cycle_condition"] = condition;
  cls.data["deleted_row"] = red.deleted_vertex ? json(std::to_string(*red.deleted_vertex)) : json(nullptr);
  cls.data["minor_values"] = prof;
  cls.data["minor_values_normalized"] = norm;
  r.clauses.push_back(cls);

  if (condition) {
    append_prefixed(r, run_main1(a, opt), "edge1/");
    if (bip) {
      append_prefixed(r, run_main2(a, opt), "edge2/");
      append_prefixed(r, certify_corollary(a, opt), "edge2/");
    }
  }
  r.settle();
  if (cls.status == Status::kFail) r.verdict = Verdict::kDiscrepancy;
  return r;
}

json to_json(const CertificateReport& r, bool with_timings) {
  json out;
  out["version"] = std::string(kReportVersion);
  out["pipeline"] = r.pipeline;
  json inst;
  inst["kind"] = r.instance.kind;
  inst["description"] = r.instance.description;
  if (r.instance.matrix) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.instance.matrix->rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < r.instance.matrix->cols(); ++j) row.push_back((*r.instance.matrix)(i, j).get_str());
      rows.push_back(row);
    }
    inst["matrix"] = rows;
  }
  if (r.instance.graph) {
    json edges = json::array();
    for (auto [u, v] : r.instance.graph->edges()) edges.push_back({std::to_string(u), std::to_string(v)});
    inst["graph"] = {{"vertices", std::to_string(r.instance.graph->vertex_count())}, {"edges", edges}};
  }
  inst["hash"] = r.instance.hash();
  out["instance"] = inst;
  auto checks = [](const std::vector<Check>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"data", c.data}});
    return a;
  };
  out["hypotheses"] = checks(r.hypotheses);
  out["clauses"] = checks(r.clauses);
  out["verdict"] = std::string(to_string(r.verdict));
  json t = json::object();
  if (with_timings)
    for (const auto& [name, ms] : r.timings_ms) t[name] = std::to_string(ms);
  out["timings_ms"] = t;
  return out;
}

std::string to_text(const CertificateReport& r, bool with_timings) {
  std::string out;
  out += "pipeline: " + r.pipeline + "\n";
  out += "instance: " + r.instance.kind + ", " + r.instance.description + " (hash " + r.instance.hash() + ")\n";
  auto rows = [&](const char* title, const std::vector<Check>& v) {
    out += title;
    out += ":\n";
    for (const auto& c : v) {
      std::string status(to_string(c.status));
      status.resize(8, ' ');
      out += "  " + status + c.id + "\n";
    }
  };
  rows("hypotheses", r.hypotheses);
  rows("clauses", r.clauses);
  if (with_timings)
    for (const auto& [name, ms] : r.timings_ms) out += "  time " + name + ": " + std::to_string(ms) + " ms\n";
  out += "verdict: " + std::string(to_string(r.verdict)) + "\n";
  return out;
}

}  // namespace nefcert
