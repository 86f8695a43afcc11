#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "nefcert/kernels.hpp"

using namespace nefcert::kernels;

namespace {

struct Pair {
  std::vector<Exp> a, b;
  std::size_t n;
};

// Random exponent pairs of every length up to 40, padded with zeros. About a
// third of the pairs share a prefix so first_difference sees late mismatches.
std::vector<Pair> random_pairs(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(0, 40), small(0, 3), big(0, 1 << 20), coin(0, 2);
  std::vector<Pair> out;
  for (int t = 0; t < count; ++t) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    const std::size_t padded = padded_length(n);
    Pair p{std::vector<Exp>(padded, 0), std::vector<Exp>(padded, 0), n};
    const bool large = coin(rng) == 0;
    for (std::size_t i = 0; i < n; ++i) {
      p.a[i] = large ? big(rng) : small(rng);
      p.b[i] = large ? big(rng) : small(rng);
    }
    if (coin(rng) == 0 && n > 0) {
      const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      std::copy(p.a.begin(), p.a.begin() + static_cast<long>(cut), p.b.begin());
    }
    if (coin(rng) == 0) p.b = p.a;
    out.push_back(std::move(p));
  }
  return out;
}

void check_equivalent(const ExponentOps& ref, const ExponentOps& alt, const std::vector<Pair>& pairs) {
  for (const auto& p : pairs) {
    const std::size_t padded = p.a.size();
    CHECK(ref.divides(p.a.data(), p.b.data(), padded) == alt.divides(p.a.data(), p.b.data(), padded));
    CHECK(ref.coprime(p.a.data(), p.b.data(), padded) == alt.coprime(p.a.data(), p.b.data(), padded));
    CHECK(ref.first_difference(p.a.data(), p.b.data(), padded) ==
          alt.first_difference(p.a.data(), p.b.data(), padded));
    CHECK(ref.degree(p.a.data(), padded) == alt.degree(p.a.data(), padded));
    CHECK(ref.max_entry(p.a.data(), padded) == alt.max_entry(p.a.data(), padded));
    std::vector<Exp> x(padded), y(padded);
    ref.lcm(p.a.data(), p.b.data(), x.data(), padded);
    alt.lcm(p.a.data(), p.b.data(), y.data(), padded);
    CHECK(x == y);
    ref.gcd(p.a.data(), p.b.data(), x.data(), padded);
    alt.gcd(p.a.data(), p.b.data(), y.data(), padded);
    CHECK(x == y);
    ref.add(p.a.data(), p.b.data(), x.data(), padded);
    alt.add(p.a.data(), p.b.data(), y.data(), padded);
    CHECK(x == y);
    ref.sub(p.a.data(), p.b.data(), x.data(), padded);
    alt.sub(p.a.data(), p.b.data(), y.data(), padded);
    CHECK(x == y);
  }
}

}  // namespace

TEST_CASE("scalar kernels against a direct oracle") {
  const ExponentOps& s = scalar_ops();
  for (const auto& p : random_pairs(21, 500)) {
    const std::size_t m = p.a.size();
    bool divides = true, coprime = true;
    std::size_t first = m;
    std::int64_t deg = 0;
    Exp mx = 0;
    for (std::size_t i = 0; i < m; ++i) {
      divides = divides && p.a[i] <= p.b[i];
      coprime = coprime && !(p.a[i] > 0 && p.b[i] > 0);
      if (first == m && p.a[i] != p.b[i]) first = i;
      deg += p.a[i];
      mx = std::max(mx, p.a[i]);
    }
    CHECK(s.divides(p.a.data(), p.b.data(), m) == divides);
    CHECK(s.coprime(p.a.data(), p.b.data(), m) == coprime);
    CHECK(s.first_difference(p.a.data(), p.b.data(), m) == first);
    CHECK(s.degree(p.a.data(), m) == deg);
    CHECK(s.max_entry(p.a.data(), m) == mx);
    std::vector<Exp> out(m);
    s.lcm(p.a.data(), p.b.data(), out.data(), m);
    for (std::size_t i = 0; i < m; ++i) CHECK(out[i] == std::max(p.a[i], p.b[i]));
    s.sub(p.a.data(), p.b.data(), out.data(), m);
    for (std::size_t i = 0; i < m; ++i) CHECK(out[i] == p.a[i] - p.b[i]);
  }
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const ExponentOps* v = avx2_ops();
  if (v == nullptr) {
    MESSAGE("AVX2 variant unavailable on this machine; equivalence not exercised");
    return;
  }
  CHECK(v->name != scalar_ops().name);
  check_equivalent(scalar_ops(), *v, random_pairs(22, 2000));
}

TEST_CASE("active variant is one of the built variants") {
  const ExponentOps& a = active_ops();
  const bool known = &a == &scalar_ops() || (avx2_ops() != nullptr && &a == avx2_ops());
  CHECK(known);
}
