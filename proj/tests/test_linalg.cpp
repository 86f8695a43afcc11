#include <doctest.h>

#include <algorithm>
#include <random>

#include "nefcert/error.hpp"
#include "nefcert/linalg.hpp"
#include "support.hpp"

using namespace nefcert;
using nefcert::testing::cofactor_determinant;
using nefcert::testing::random_matrix;

namespace {

const IntMatrix kC3 = IntMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});

std::vector<Int> sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Int gcd_of_minors(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  for (const auto& rows : nefcert::testing::subsets(m.rows(), k))
    for (const auto& cols : nefcert::testing::subsets(m.cols(), k)) {
      const IntMatrix sub = m.select_rows(rows).select_columns(cols);
      Int d = cofactor_determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(IntMatrix::identity(3)) == 3);
  CHECK(rank(kC3) == 3);
  CHECK(rank(IntMatrix(2, 4)) == 0);
  CHECK(determinant(kC3) == 2);
}

TEST_CASE("maximal minor profile examples") {
  CHECK(maximal_minor_profile(IntMatrix::identity(2)) == std::vector<Int>{1});
  CHECK(maximal_minor_profile(kC3) == std::vector<Int>{2});
  CHECK(maximal_minor_profile(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}})) == std::vector<Int>{1, 1, 1});
}

TEST_CASE("is_unimodular examples") {
  for (std::size_t d = 1; d <= 4; ++d) CHECK(is_unimodular(IntMatrix::identity(d)));
  CHECK(is_unimodular(kC3));
  // two triangles joined by the edge 3-4
  const IntMatrix bridged = IntMatrix::from_rows({{1, 0, 1, 0, 0, 0, 0},
                                                  {1, 1, 0, 0, 0, 0, 0},
                                                  {0, 1, 1, 1, 0, 0, 0},
                                                  {0, 0, 0, 1, 1, 0, 1},
                                                  {0, 0, 0, 0, 1, 1, 0},
                                                  {0, 0, 0, 0, 0, 1, 1}});
  CHECK_FALSE(is_unimodular(bridged));
  auto profile = maximal_minor_profile(bridged);
  CHECK(std::find(profile.begin(), profile.end(), Int(2)) != profile.end());
  CHECK(std::find(profile.begin(), profile.end(), Int(4)) != profile.end());
  CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 1, 1}})));  // rank deficient
}

TEST_CASE("hnf examples") {
  auto id = hnf(IntMatrix::identity(3));
  CHECK(id.h == IntMatrix::identity(3));
  CHECK(id.u == IntMatrix::identity(3));
  const IntMatrix m = IntMatrix::from_rows({{2, 1}, {0, 1}});
  auto f = hnf(m);
  CHECK(m * f.u == f.h);
  CHECK(f.rank == 2);
  CHECK(abs(determinant(f.u)) == 1);
  auto s = hnf(IntMatrix::from_rows({{4}}));
  CHECK(s.h == IntMatrix::from_rows({{4}}));
  CHECK(s.u == IntMatrix::from_rows({{1}}));
  auto neg = hnf(IntMatrix::from_rows({{-4}}));
  CHECK(neg.h == IntMatrix::from_rows({{4}}));
}

TEST_CASE("smith examples") {
  CHECK(smith_invariants(IntMatrix::identity(3)).diagonal == std::vector<Int>{1, 1, 1});
  const IntMatrix c3_origin = IntMatrix::from_columns({{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 0, 0, 1}}, 4);
  auto d = smith_invariants(c3_origin).diagonal;
  CHECK(std::find(d.begin(), d.end(), Int(2)) != d.end());
  CHECK(smith_invariants(IntMatrix::from_rows({{6}})).diagonal == std::vector<Int>{6});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_lattice_basis(IntMatrix::identity(3)).empty());
  const IntMatrix c4 = IntMatrix::from_columns({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}, 4);
  auto k = kernel_lattice_basis(c4);
  REQUIRE(k.size() == 1);
  const IntVector plus{1, -1, 1, -1}, minus{-1, 1, -1, 1};
  CHECK((k[0] == plus || k[0] == minus));
  auto k2 = kernel_lattice_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK((k2[0] == IntVector{1, -1} || k2[0] == IntVector{-1, 1}));
}

TEST_CASE("solve_rational examples") {
  auto x = solve_rational(IntMatrix::identity(3), RatVector(3, Rat(1)));
  REQUIRE(x);
  CHECK(*x == RatVector(3, Rat(1)));
  auto c = solve_rational(IntMatrix::identity(2), RatVector{1, 1});
  REQUIRE(c);
  CHECK(*c == RatVector{1, 1});
  CHECK_FALSE(solve_rational(IntMatrix::from_rows({{1, 2}}), RatVector{1, 1}));
}

TEST_CASE("in_convex_hull") {
  const std::vector<IntVector> square{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(in_convex_hull(square, IntVector{1, 1}));
  CHECK(in_convex_hull(square, IntVector{2, 2}));
  CHECK_FALSE(in_convex_hull(square, IntVector{3, 1}));
  const std::vector<IntVector> seg{{0, 0}, {2, 2}};
  CHECK(in_convex_hull(seg, IntVector{1, 1}));
  CHECK_FALSE(in_convex_hull(seg, IntVector{1, 0}));
}

TEST_CASE("property: determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, -6, 6);
    CHECK(determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("property: rank equals the largest nonvanishing minor size") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMatrix m = random_matrix(rng, r, c, -2, 2);
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;  // force a dependency
    std::size_t oracle = 0;
    for (std::size_t k = 1; k <= std::min(r, c); ++k)
      if (gcd_of_minors(m, k) != 0) oracle = k;
    CHECK(rank(m) == oracle);
  }
}

TEST_CASE("property: hnf is a unimodular column transform in echelon shape") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 6;
    const IntMatrix m = random_matrix(rng, r, c, -5, 5);
    auto f = hnf(m);
    REQUIRE(f.u.rows() == c);
    CHECK(m * f.u == f.h);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(f.rank == rank(m));
    for (std::size_t j = f.rank; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) CHECK(f.h(i, j) == 0);
  }
}

TEST_CASE("property: smith invariants match gcds of minors") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    const IntMatrix m = random_matrix(rng, r, c, -6, 6);
    auto s = smith_invariants(m);
    Int prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prefix *= s.diagonal[k - 1];
      CHECK(abs(prefix) == gcd_of_minors(m, k));
    }
    for (std::size_t k = 1; k < s.rank(); ++k) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
  }
}

TEST_CASE("property: kernel basis is saturated and complete") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 3, c = r + 1 + (trial / 3) % 4;
    const IntMatrix m = random_matrix(rng, r, c, -3, 3);
    auto k = kernel_lattice_basis(m);
    CHECK(k.size() == c - rank(m));
    for (const auto& v : k) CHECK(m * v == IntVector(r, Int(0)));
    if (!k.empty()) {
      // saturated iff the basis matrix has all Smith invariants equal to 1
      CHECK(smith_invariants(IntMatrix::from_columns(k, c)).all_nonzero_are_one());
    }
  }
}

TEST_CASE("property: minor profile is invariant under unimodular row operations") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, 3, 5, -2, 2);
    if (rank(m) < 3) continue;
    IntMatrix t = m;
    for (std::size_t j = 0; j < 5; ++j) t(0, j) += 3 * m(1, j);
    CHECK(sorted(maximal_minor_profile(m)) == sorted(maximal_minor_profile(t)));
    CHECK(is_unimodular(m) == is_unimodular(t));
  }
}
