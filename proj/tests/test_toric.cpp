#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nefcert/config.hpp"
#include "nefcert/error.hpp"
#include "nefcert/toric.hpp"
#include "oracles.hpp"

using namespace nefcert;

namespace {

const IntMatrix kC3 = IntMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
const IntMatrix kC4 = IntMatrix::from_columns({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}, 4);
// C4 with the last vertex row removed
const IntMatrix kC4r = IntMatrix::from_rows({{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}});

Exponent mono(std::size_t n, std::initializer_list<std::size_t> vars) {
  Exponent e(n, 0);
  for (auto v : vars) ++e[v];
  return e;
}

// Binomials compared up to sign.
std::set<std::set<Exponent>> unsigned_set(const std::vector<Binomial>& bs) {
  std::set<std::set<Exponent>> out;
  for (const auto& b : bs) out.insert({b.plus, b.minus});
  return out;
}

bool has(const std::vector<Binomial>& bs, const Exponent& a, const Exponent& b) {
  return std::any_of(bs.begin(), bs.end(), [&](const Binomial& x) {
    return (x.plus == a && x.minus == b) || (x.plus == b && x.minus == a);
  });
}

IntMatrix random_graded(std::mt19937& rng, std::size_t rows, std::size_t cols, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  for (;;) {
    std::set<IntVector> seen;
    std::vector<IntVector> columns;
    for (std::size_t c = 0; c < cols; ++c) {
      IntVector v(rows + 1);
      for (std::size_t r = 0; r < rows; ++r) v[r] = d(rng);
      v[rows] = 1;
      columns.push_back(v);
      seen.insert(v);
    }
    if (seen.size() == cols) return IntMatrix::from_columns(columns, rows + 1);
  }
}

}  // namespace

TEST_CASE("binomials and term orders") {
  auto b = binomial_from_vector({1, -1, 1, -1});
  CHECK(b.plus == Exponent{1, 0, 1, 0});
  CHECK(b.minus == Exponent{0, 1, 0, 1});
  CHECK(degree(Exponent{2, 0, 1}) == 3);
  CHECK(is_squarefree(Exponent{1, 0, 1}));
  CHECK_FALSE(is_squarefree(Exponent{2, 0, 1}));

  const TermOrder o({2, 0, 1});  // x3 < x1 < x2
  CHECK(o.compare(Exponent{1, 1, 0}, Exponent{0, 1, 1}) > 0);  // x1x2 > x2x3
  CHECK(o.compare(Exponent{2, 0, 0}, Exponent{0, 1, 0}) > 0);  // degree first
  CHECK(o.compare(Exponent{1, 0, 1}, Exponent{1, 0, 1}) == 0);
  CHECK(TermOrder::with_smallest(3, 1).ranking() == std::vector<std::size_t>{1, 0, 2});
  const std::vector<std::string> names{"x1", "x2", "x3", "x4"};
  CHECK(to_string(Binomial{Exponent{1, 0, 1, 0}, Exponent{0, 1, 0, 1}}, names) == "x1*x3 - x2*x4");
  CHECK(to_string(Exponent{2, 0, 0, 1}, names) == "x1^2*x4");
}

TEST_CASE("toric_ideal examples") {
  CHECK(toric_ideal(IntMatrix::identity(3)).empty());
  CHECK(toric_ideal(kC3).empty());
  auto c4 = toric_ideal(kC4);
  CHECK(unsigned_set(c4) == unsigned_set({Binomial{mono(4, {0, 2}), mono(4, {1, 3})}}));
  CHECK_THROWS_AS(toric_ideal(IntMatrix::from_rows({{1, 2}})), Error);
}

TEST_CASE("buchberger_reduced examples") {
  const Binomial c4{mono(4, {0, 2}), mono(4, {1, 3})};
  for (std::size_t s = 0; s < 4; ++s) {
    auto g = buchberger_reduced({c4}, TermOrder::with_smallest(4, s));
    CHECK(unsigned_set(g.elements) == unsigned_set({c4}));
  }
  CHECK(buchberger_reduced({}, TermOrder::with_smallest(3, 0)).elements.empty());

  // I_{A±} for A = (e1, e2): variables x1, x2, y1, y2, z = 0..4, order z < x1 < y1 < x2 < y2
  auto cs = centrally_symmetric(as_configuration(IntMatrix::identity(2)));
  const TermOrder pm({4, 0, 2, 1, 3});
  auto g = buchberger_reduced(toric_ideal(cs.full), pm);
  const Exponent z2 = mono(5, {4, 4});
  CHECK(g.elements.size() == 2);
  CHECK(has(g.elements, mono(5, {0, 2}), z2));
  CHECK(has(g.elements, mono(5, {1, 3}), z2));
  for (const auto& b : g.elements) CHECK(pm.compare(b.plus, b.minus) > 0);

  CHECK_THROWS_AS(buchberger_reduced({Binomial{mono(3, {0}), mono(3, {1, 2})}}, pm), Error);
}

TEST_CASE("initial ideals and normal forms") {
  auto cs = centrally_symmetric(as_configuration(IntMatrix::identity(2)));
  auto g = buchberger_reduced(toric_ideal(cs.full), TermOrder({4, 0, 2, 1, 3}));
  auto in = initial_ideal(g);
  std::set<Exponent> gens(in.generators.begin(), in.generators.end());
  CHECK(gens == std::set<Exponent>{mono(5, {0, 2}), mono(5, {1, 3})});
  CHECK(is_squarefree(in));
  CHECK(initial_ideal(GroebnerBasis{}).generators.empty());
  CHECK(normal_form(mono(5, {0, 2}), g) == mono(5, {4, 4}));
  CHECK(reduces_to_zero(Binomial{mono(5, {0, 2}), mono(5, {1, 3})}, g));
  CHECK_FALSE(reduces_to_zero(Binomial{mono(5, {0, 1}), mono(5, {1, 3})}, g));

  const Binomial c4{mono(4, {0, 2}), mono(4, {1, 3})};
  auto gc4 = buchberger_reduced({c4}, TermOrder({0, 1, 2, 3}));
  auto lead = initial_ideal(gc4).generators;
  REQUIRE(lead.size() == 1);
  // x1 smallest: x2x4 has no x1 and is the larger monomial
  CHECK(lead[0] == mono(4, {1, 3}));
  auto gc4b = buchberger_reduced({c4}, TermOrder({1, 0, 2, 3}));
  CHECK(initial_ideal(gc4b).generators[0] == mono(4, {0, 2}));
}

TEST_CASE("stanley-reisner complexes") {
  // variables x1, y1, x2, y2, z
  MonomialIdeal pm{{mono(5, {0, 1}), mono(5, {2, 3})}};
  auto k = stanley_reisner(pm, 5);
  CHECK(k.facets.size() == 4);
  for (const auto& f : k.facets) {
    CHECK(f.size() == 3);
    CHECK(std::find(f.begin(), f.end(), 4) != f.end());
  }
  CHECK(f_vector(k) == std::vector<std::int64_t>{1, 5, 8, 4});
  CHECK(h_polynomial(k) == Polynomial{1, 2, 1});

  auto full = stanley_reisner(MonomialIdeal{}, 3);
  CHECK(full.facets == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(h_polynomial(full) == Polynomial{1});

  auto two = stanley_reisner(MonomialIdeal{{mono(2, {0, 1})}}, 2);
  CHECK(two.facets == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(h_polynomial(two) == Polynomial{1, 1});
  CHECK(f_vector(two) == std::vector<std::int64_t>{1, 2});

  CHECK_THROWS_AS(stanley_reisner(MonomialIdeal{{mono(2, {0, 0})}}, 2), Error);
}

TEST_CASE("unimodular triangulations") {
  auto cs = centrally_symmetric(as_configuration(IntMatrix::identity(2)));
  auto g = buchberger_reduced(toric_ideal(cs.full), TermOrder({4, 0, 2, 1, 3}));
  auto k = stanley_reisner(initial_ideal(g), 5);
  CHECK(triangulation_unimodular(k, cs.full));

  // homogenized 0, e1, e2, (1,2); the face {0, e1, (1,2)} has determinant 2
  const IntMatrix pts = IntMatrix::from_rows({{0, 1, 0, 1}, {0, 0, 1, 2}, {1, 1, 1, 1}});
  CHECK_FALSE(triangulation_unimodular(SimplicialComplex{4, {{0, 1, 3}, {0, 2, 3}}}, pts));
  CHECK(triangulation_unimodular(SimplicialComplex{4, {{0, 1, 2}}}, pts));
  CHECK(triangulation_unimodular(SimplicialComplex{3, {{0, 1, 2}}}, homogenize({{0, 0}, {1, 0}, {0, 1}})));
}

TEST_CASE("conformance: centrally symmetric") {
  auto e = conform_pm(as_configuration(IntMatrix::identity(2)));
  CHECK(e.conforms);
  CHECK(e.s() == 0);
  CHECK(e.basis.elements.size() == 2);

  auto c3 = conform_pm(as_configuration(kC3));
  CHECK(c3.conforms);
  CHECK(c3.s() == 0);

  auto c4 = conform_pm(as_configuration(kC4r));
  CHECK(c4.conforms);
  const auto xy = xy_names(4);
  std::set<std::string> g;
  for (const auto& b : c4.g) g.insert(to_string(b, xy));
  // common xy layout: x1..x4 = 0..3, y1..y4 = 4..7
  CHECK(has(c4.g, mono(8, {0, 2}), mono(8, {1, 3})));
  CHECK(has(c4.g, mono(8, {4, 6}), mono(8, {5, 7})));
  CHECK(c4.failures.empty());

  CHECK_THROWS_AS(conform_pm(as_configuration(IntMatrix::from_rows({{1, 0, 2}, {0, 1, -1}}))), Error);
}

TEST_CASE("conformance: Cayley and origin Cayley share the g's") {
  auto e = as_configuration(IntMatrix::identity(2));
  auto cay = conform_cayley(e);
  CHECK(cay.conforms);
  CHECK(cay.s() == 0);
  REQUIRE(cay.basis.elements.size() == 1);
  CHECK(cay.structural.size() == 1);

  auto az = conform_azero(e);
  CHECK(az.conforms);
  CHECK(az.s() == 0);
  CHECK(az.basis.elements.size() == 2);

  auto c3 = as_configuration(kC3);
  auto c3cay = conform_cayley(c3);
  CHECK(c3cay.conforms);
  CHECK(c3cay.basis.elements.size() == 2);
  CHECK(c3cay.s() == 0);

  auto c4 = as_configuration(kC4r);
  auto pm = conform_pm(c4);
  auto c4cay = conform_cayley(c4, pm);
  auto c4az = conform_azero(c4, pm);
  CHECK(c4cay.conforms);
  CHECK(c4az.conforms);
  std::set<Binomial> gp(pm.g.begin(), pm.g.end()), gc(c4cay.g.begin(), c4cay.g.end()),
      ga(c4az.g.begin(), c4az.g.end());
  CHECK(gp == gc);
  CHECK(gp == ga);
}

TEST_CASE("cayley matrices") {
  const IntMatrix a = IntMatrix::from_rows({{2, 3}});
  CHECK(cayley_matrix(a) == IntMatrix::from_rows({{1, 1, 0, 0}, {2, 3, -2, -3}, {1, 1, 1, 1}}));
  CHECK(origin_cayley_matrix(a) ==
        IntMatrix::from_rows({{1, 1, 1, 0, 0, 0}, {0, 2, 3, 0, -2, -3}, {1, 1, 1, 1, 1, 1}}));
  CHECK(xy_names(2) == std::vector<std::string>{"x1", "x2", "y1", "y2"});
}

TEST_CASE("property: reduced bases pass the S-pair oracle and generate the toric ideal") {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 2, cols = 4 + trial % 6;
    const IntMatrix a = random_graded(rng, rows, cols, 2 + trial % 2);
    const auto gens = toric_ideal(a);
    std::vector<std::size_t> ranking(cols);
    for (std::size_t i = 0; i < cols; ++i) ranking[i] = i;
    std::shuffle(ranking.begin(), ranking.end(), rng);
    const auto g = buchberger_reduced(gens, TermOrder(ranking));
    CHECK(oracle::in_kernel(g, a));
    CHECK(oracle::is_reduced(g));
    CHECK(oracle::s_pairs_reduce(g));
    CHECK(oracle::fiber_check(g, a, 3) > 0);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("property: different orders give bases of the same ideal") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t cols = 5 + trial % 3;
    const IntMatrix a = random_graded(rng, 2, cols, 2);
    const auto gens = toric_ideal(a);
    std::vector<std::size_t> r1(cols), r2(cols);
    for (std::size_t i = 0; i < cols; ++i) r1[i] = r2[i] = i;
    std::shuffle(r2.begin(), r2.end(), rng);
    const auto g1 = buchberger_reduced(gens, TermOrder(r1));
    const auto g2 = buchberger_reduced(gens, TermOrder(r2));
    for (const auto& b : g1.elements) CHECK(reduces_to_zero(b, g2));
    for (const auto& b : g2.elements) CHECK(reduces_to_zero(b, g1));
    // the engine's reduction agrees with the oracle's
    const auto p2 = oracle::as_polys(g2);
    for (const auto& b : g1.elements) CHECK(oracle::reduces_to_zero(b.plus, b.minus, p2, r2));
  }
}

TEST_CASE("property: engine term order agrees with the oracle comparison") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    std::vector<std::size_t> ranking(n);
    for (std::size_t i = 0; i < n; ++i) ranking[i] = i;
    std::shuffle(ranking.begin(), ranking.end(), rng);
    Exponent a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = e(rng), b[i] = e(rng);
    if (trial % 3 == 0) b = a, std::swap(b[0], b[n - 1]);
    const TermOrder o(ranking);
    const int c = o.compare(a, b);
    CHECK((c > 0) == oracle::grevlex_greater(a, b, ranking));
    CHECK((c < 0) == oracle::grevlex_greater(b, a, ranking));
  }
}
