// Stanley-Reisner complexes of squarefree monomial ideals.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "nefcert/error.hpp"
#include "nefcert/toric.hpp"

namespace nefcert {
namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; m != 0; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal, std::size_t n) {
  if (n > 64) throw Error(ErrorCode::kBadParams, "more than 64 vertices");
  std::vector<Mask> supports;
  for (const auto& g : ideal.generators) {
    if (g.size() != n) throw Error(ErrorCode::kDimensionMismatch, "generator length");
    if (!is_squarefree(g)) throw Error(ErrorCode::kNotSquarefree, "initial ideal is not squarefree");
    Mask m = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] > 0) m |= Mask{1} << v;
    supports.push_back(m);
  }
  // Non-faces touching v, for the incremental check.
  std::vector<std::vector<Mask>> touching(n);
  for (auto s : supports)
    for (auto v : members(s)) touching[v].push_back(s);

  auto addable = [&](Mask face, std::size_t v) {
    const Mask grown = face | (Mask{1} << v);
    for (auto s : touching[v])
      if ((s & ~grown) == 0) return false;
    return true;
  };

  SimplicialComplex out;
  out.vertex_count = n;
  Mask face = 0;
  auto search = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      for (std::size_t w = 0; w < n; ++w)
        if (!(face >> w & 1) && addable(face, w)) return;
      out.facets.push_back(members(face));
      return;
    }
    if (addable(face, v)) {
      face |= Mask{1} << v;
      self(self, v + 1);
      face &= ~(Mask{1} << v);
    }
    self(self, v + 1);
  };
  search(search, 0);
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& k) {
  std::unordered_set<Mask> faces;
  std::size_t top = 0;
  for (const auto& f : k.facets) {
    if (f.size() > 64) throw Error(ErrorCode::kBadParams, "facet too large");
    top = std::max(top, f.size());
    Mask full = 0;
    for (auto v : f) {
      if (v >= 64) throw Error(ErrorCode::kBadParams, "vertex index beyond 63");
      full |= Mask{1} << v;
    }
    // All subsets of the facet.
    for (Mask s = full;; s = (s - 1) & full) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::int64_t> f(top + 1, 0);
  if (faces.empty()) return {0};
  for (auto s : faces) ++f[static_cast<std::size_t>(std::popcount(s))];
  return f;
}

Polynomial h_polynomial(const SimplicialComplex& k) {
  const auto f = f_vector(k);  // f[i] = f_{i-1}
  const std::size_t dim = f.size() - 1;
  auto binom = [](std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return std::int64_t{0};
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  Polynomial h(dim + 1, 0);
  for (std::size_t kk = 0; kk <= dim; ++kk)
    for (std::size_t i = 0; i <= kk; ++i) {
      const std::int64_t term = binom(static_cast<std::int64_t>(dim - i), static_cast<std::int64_t>(kk - i)) * f[i];
      h[kk] += (kk - i) % 2 == 0 ? term : -term;
    }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

bool triangulation_unimodular(const SimplicialComplex& k, const IntMatrix& points) {
  if (points.cols() != k.vertex_count) throw Error(ErrorCode::kDimensionMismatch, "point count");
  const SmithInvariants whole = smith_invariants(points);
  const std::size_t r = whole.rank();
  const Int index = whole.product();
  for (const auto& f : k.facets) {
    if (f.size() != r) return false;
    const SmithInvariants s = smith_invariants(points.select_columns(f));
    if (s.rank() != r || s.product() != index) return false;
  }
  return true;
}

}  // namespace nefcert
