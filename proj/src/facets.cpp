#include "nefcert/facets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "nefcert/error.hpp"

namespace nefcert::detail {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bits zero;
};

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  const Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

std::int64_t narrow(const Int& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::kOverflow, "facet coefficient exceeds 64 bits");
  return x.get_si();
}

HalfSpace to_half_space(const IntVector& normal, const Int& rhs) {
  HalfSpace h;
  h.normal.reserve(normal.size());
  for (const auto& x : normal) h.normal.push_back(narrow(x));
  h.rhs = narrow(rhs);
  return h;
}

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<HalfSpace> facets_by_subsets(const std::vector<Point>& points, std::size_t dim) {
  if (dim == 0) return {};
  std::set<HalfSpace> found;
  std::vector<IntVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_int_vector(p));

  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& s) {
    IntMatrix diff(dim - 1, dim);
    for (std::size_t r = 1; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) diff(r - 1, c) = pts[s[r]][c] - pts[s[0]][c];
    const auto ker = kernel_lattice_basis(diff);
    if (ker.size() != 1) return;
    IntVector a = ker[0];
    const Int level = dot(a, pts[s[0]]);
    bool below = true, above = true;
    for (const auto& p : pts) {
      const Int v = dot(a, p);
      if (v > level) below = false;
      if (v < level) above = false;
    }
    if (below) found.insert(to_half_space(a, level));
    if (above) {
      for (auto& x : a) x = -x;
      found.insert(to_half_space(a, -level));
    }
  });
  return {found.begin(), found.end()};
}

std::vector<HalfSpace> facets_by_double_description(const std::vector<Point>& points,
                                                    std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t n = dim + 1;
  const std::size_t count = points.size();
  std::vector<IntVector> g(count, IntVector(n));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < dim; ++i) g[k][i] = -points[k][i];
    g[k][dim] = 1;
  }
  const auto initial = row_basis(IntMatrix::from_rows(g, n));
  if (initial.size() != n)
    throw Error(ErrorCode::kPreconditionViolated, "point set is not full-dimensional");

  // Extreme rays of the simplicial cone cut out by the initial constraints.
  const IntMatrix g0 = IntMatrix::from_rows(
      [&] {
        std::vector<IntVector> rows;
        for (auto k : initial) rows.push_back(g[k]);
        return rows;
      }(),
      n);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    RatVector e(n, Rat(0));
    e[k] = 1;
    const auto sol = solve_rational(g0.transpose(), e);
    if (!sol) throw Error(ErrorCode::kInternalInconsistency, "initial cone is singular");
    Int den = 1;
    for (const auto& x : *sol) den = lcm(den, Int(x.get_den()));
    Ray r{IntVector(n), Bits(count)};
    for (std::size_t i = 0; i < n; ++i) r.v[i] = Int((*sol)[i] * den);
    make_primitive(r.v);
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) r.zero.set(initial[j]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(count, false);
  for (auto k : initial) done[k] = true;
  for (std::size_t k = 0; k < count; ++k) {
    if (done[k]) continue;
    done[k] = true;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(g[k], rays[r].v);
      if (val[r] > 0) {
        pos.push_back(r);
        next.push_back(rays[r]);
      } else if (val[r] < 0) {
        neg.push_back(r);
      } else {
        next.push_back(rays[r]);
        next.back().zero.set(k);
      }
    }
    if (neg.empty()) {
      rays = std::move(next);
      continue;
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 1 < dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && common.subset_of(rays[t].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray w{IntVector(n), common};
        for (std::size_t i = 0; i < n; ++i) w.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        make_primitive(w.v);
        w.zero.set(k);
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  std::vector<HalfSpace> out;
  for (const auto& r : rays) {
    IntVector a(r.v.begin(), r.v.begin() + static_cast<std::ptrdiff_t>(dim));
    const Int ga = content(a);
    if (ga == 0) continue;
    Int b = r.v[dim];
    if (b % ga != 0) throw Error(ErrorCode::kInternalInconsistency, "non-integral facet offset");
    for (auto& x : a) x /= ga;
    b /= ga;
    out.push_back(to_half_space(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HalfSpace> full_dim_facets(const std::vector<Point>& points, std::size_t dim) {
  if (dim <= 2) return facets_by_subsets(points, dim);
  return facets_by_double_description(points, dim);
}

}  // namespace nefcert::detail
