#include <algorithm>
#include <map>
#include <numeric>

#include "nefcert/error.hpp"
#include "nefcert/toric.hpp"

namespace nefcert {

std::vector<Binomial> toric_ideal(const IntMatrix& a) {
  if (a.cols() == 0) return {};
  RatVector ones(a.cols(), Rat(1));
  if (!solve_rational(a, ones))
    throw Error(ErrorCode::kPreconditionViolated, "matrix is not graded (no c with c^T A = 1)");
  std::vector<Binomial> current;
  for (const auto& u : kernel_lattice_basis(a)) current.push_back(binomial_from_vector(u));
  if (current.empty()) return current;

  const std::size_t n = a.cols();
  std::vector<std::vector<Binomial>> previous(n);
  while (true) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      GroebnerBasis g = buchberger_reduced(current, TermOrder::with_smallest(n, v));
      if (g.elements != previous[v]) changed = true;
      previous[v] = g.elements;
      current = std::move(g.elements);
    }
    if (!changed) return current;
  }
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  MonomialIdeal out;
  for (const auto& b : g.elements) out.generators.push_back(b.plus);
  return out;
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const Exponent& e) { return is_squarefree(e); });
}

std::string to_string(const Exponent& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += v < names.size() ? names[v] : "v" + std::to_string(v + 1);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b, std::span<const std::string> names) {
  return to_string(b.plus, names) + " - " + to_string(b.minus, names);
}

std::string_view to_string(GbMode mode) {
  switch (mode) {
    case GbMode::kCentrallySymmetric: return "pm";
    case GbMode::kCayley: return "cayley";
    case GbMode::kOriginCayley: return "azero";
  }
  return "?";
}

std::vector<std::string> xy_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

IntMatrix cayley_matrix(const IntMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  IntMatrix m(d + 2, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i) = 1;
    for (std::size_t r = 0; r < d; ++r) {
      m(r + 1, i) = a(r, i);
      m(r + 1, n + i) = -a(r, i);
    }
    m(d + 1, i) = 1;
    m(d + 1, n + i) = 1;
  }
  return m;
}

IntMatrix origin_cayley_matrix(const IntMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  IntMatrix m(d + 2, 2 * n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    m(0, i) = 1;
    for (std::size_t r = 0; i > 0 && r < d; ++r) {
      m(r + 1, i) = a(r, i - 1);
      m(r + 1, n + 1 + i) = -a(r, i - 1);
    }
    m(d + 1, i) = 1;
    m(d + 1, n + 1 + i) = 1;
  }
  return m;
}

namespace {

Exponent unit_pair(std::size_t size, std::size_t a, std::size_t b) {
  Exponent e(size, 0);
  e[a] += 1;
  e[b] += 1;
  return e;
}

void require_unimodular(const Configuration& a) {
  if (!is_unimodular(a.matrix())) throw Error(ErrorCode::kNotUnimodular, "configuration is not unimodular");
}

std::vector<Point> column_points(const IntMatrix& m) {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(to_point(m.column(j)));
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Splits the basis into the structural block and the rest; the rest is
// checked against `expected_g` when given.
void classify(ConformanceReport& r, const std::vector<Binomial>& structural_expected,
              const std::vector<std::size_t>& xy_index, const std::vector<Binomial>* expected_g) {
  const auto& names = r.variable_names;
  std::vector<bool> seen(structural_expected.size(), false);
  const std::size_t n2 = xy_index.size();
  for (const auto& b : r.basis.elements) {
    auto it = std::find(structural_expected.begin(), structural_expected.end(), b);
    if (it != structural_expected.end()) {
      seen[static_cast<std::size_t>(it - structural_expected.begin())] = true;
      r.structural.push_back(b);
      continue;
    }
    // Elements outside the structural block must live on the x_i, y_i
    // (i >= 1) variables.
    Binomial g{Exponent(n2, 0), Exponent(n2, 0)};
    Exponent plus = b.plus, minus = b.minus;
    for (std::size_t k = 0; k < n2; ++k) {
      g.plus[k] = plus[xy_index[k]];
      g.minus[k] = minus[xy_index[k]];
      plus[xy_index[k]] = 0;
      minus[xy_index[k]] = 0;
    }
    if (degree(plus) != 0 || degree(minus) != 0) {
      r.conforms = false;
      r.failures.push_back("element outside the x,y subring: " + to_string(b, names));
      continue;
    }
    r.g.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < structural_expected.size(); ++k)
    if (!seen[k]) {
      r.conforms = false;
      r.failures.push_back("missing structural element: " + to_string(structural_expected[k], names));
    }
  if (expected_g) {
    std::vector<Binomial> mine = r.g, theirs = *expected_g;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) {
      r.conforms = false;
      const auto xy = xy_names(n2 / 2);
      for (const auto& g : mine)
        if (!std::binary_search(theirs.begin(), theirs.end(), g))
          r.failures.push_back("g not shared with the centrally symmetric basis: " + to_string(g, xy));
      for (const auto& g : theirs)
        if (!std::binary_search(mine.begin(), mine.end(), g))
          r.failures.push_back("g of the centrally symmetric basis missing: " + to_string(g, xy));
    }
  }
}

}  // namespace

ConformanceReport conform_pm(const Configuration& a) {
  require_unimodular(a);
  const CentrallySymmetric cs = centrally_symmetric(a);
  const std::size_t n = cs.n();
  ConformanceReport r;
  r.mode = GbMode::kCentrallySymmetric;
  r.matrix = cs.full;
  r.variable_names = cs.variable_names();
  std::vector<std::size_t> ranking{cs.z()};
  for (std::size_t i = 1; i <= n; ++i) {
    ranking.push_back(cs.x(i));
    ranking.push_back(cs.y(i));
  }
  const TermOrder order(ranking);
  r.basis = buchberger_reduced(toric_ideal(r.matrix), order);

  std::vector<Binomial> structural;
  for (std::size_t i = 1; i <= n; ++i) {
    Exponent zz(2 * n + 1, 0);
    zz[cs.z()] = 2;
    structural.push_back({unit_pair(2 * n + 1, cs.x(i), cs.y(i)), zz});
  }
  std::vector<std::size_t> xy(2 * n);
  std::iota(xy.begin(), xy.end(), std::size_t{0});
  classify(r, structural, xy, nullptr);

  const auto names = xy_names(n);
  for (const auto& g : r.g) {
    if (g.plus[0] != 0 || g.plus[n] != 0) {
      r.conforms = false;
      r.failures.push_back("leading term involves x1 or y1: " + to_string(g, names));
    }
    if (!is_squarefree(g.plus) || !is_squarefree(g.minus)) {
      r.conforms = false;
      r.failures.push_back("monomial not squarefree: " + to_string(g, names));
    }
  }
  return r;
}

ConformanceReport conform_cayley(const Configuration& a, const ConformanceReport& pm) {
  require_unimodular(a);
  const IntMatrix& m = a.matrix();
  if (polytope_from_columns(m).lattice_points() != column_points(m))
    throw Error(ErrorCode::kPreconditionViolated, "P_A has lattice points besides the columns");
  const std::size_t n = a.size();
  ConformanceReport r;
  r.mode = GbMode::kCayley;
  r.matrix = cayley_matrix(m);
  r.variable_names = xy_names(n);
  std::vector<std::size_t> ranking;
  for (std::size_t i = 0; i < n; ++i) {
    ranking.push_back(i);
    ranking.push_back(n + i);
  }
  r.basis = buchberger_reduced(toric_ideal(r.matrix), TermOrder(ranking));

  std::vector<Binomial> structural;
  for (std::size_t i = 1; i < n; ++i)
    structural.push_back({unit_pair(2 * n, i, n + i), unit_pair(2 * n, 0, n)});
  std::vector<std::size_t> xy(2 * n);
  std::iota(xy.begin(), xy.end(), std::size_t{0});
  classify(r, structural, xy, &pm.g);
  return r;
}

ConformanceReport conform_cayley(const Configuration& a) { return conform_cayley(a, conform_pm(a)); }

ConformanceReport conform_azero(const Configuration& a, const ConformanceReport& pm) {
  require_unimodular(a);
  const IntMatrix& m = a.matrix();
  const IntMatrix m0 = append_origin(a);
  if (polytope_from_columns(m0).lattice_points() != column_points(m0))
    throw Error(ErrorCode::kPreconditionViolated, "P_{A_0} has lattice points besides the columns and 0");
  const std::size_t n = a.size();
  ConformanceReport r;
  r.mode = GbMode::kOriginCayley;
  r.matrix = origin_cayley_matrix(m);
  for (std::size_t i = 0; i <= n; ++i) r.variable_names.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i) r.variable_names.push_back("y" + std::to_string(i));
  std::vector<std::size_t> ranking;
  for (std::size_t i = 0; i <= n; ++i) {
    ranking.push_back(i);
    ranking.push_back(n + 1 + i);
  }
  r.basis = buchberger_reduced(toric_ideal(r.matrix), TermOrder(ranking));

  const std::size_t vars = 2 * n + 2;
  std::vector<Binomial> structural;
  for (std::size_t i = 1; i <= n; ++i)
    structural.push_back({unit_pair(vars, i, n + 1 + i), unit_pair(vars, 0, n + 1)});
  std::vector<std::size_t> xy;
  for (std::size_t i = 1; i <= n; ++i) xy.push_back(i);
  for (std::size_t i = 1; i <= n; ++i) xy.push_back(n + 1 + i);
  classify(r, structural, xy, &pm.g);
  return r;
}

ConformanceReport conform_azero(const Configuration& a) { return conform_azero(a, conform_pm(a)); }

}  // namespace nefcert
