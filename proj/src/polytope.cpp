#include "nefcert/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "nefcert/error.hpp"
#include "nefcert/facets.hpp"

namespace nefcert {

Point to_point(const IntVector& v) {
  Point p;
  p.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw Error(ErrorCode::kOverflow, "coordinate exceeds 64 bits");
    p.push_back(x.get_si());
  }
  return p;
}

IntVector to_int_vector(const Point& p) {
  IntVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "64-bit overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "64-bit overflow");
  return r;
}

std::int64_t dot(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Model {
  AffineLatticeMap map;
  std::vector<Point> vertices;
  std::vector<HalfSpace> facets;
  std::vector<HalfSpace> equations;
  Point lo, hi;
};

// Lattice points y of the model with <a_f, y> <= scale * b_f - shrink.
// Coordinates are fixed in order; each one gets the interval allowed by the
// box and by the facets whose last nonzero coefficient sits at that index.
class Enumerator {
 public:
  Enumerator(const Model& m, std::int64_t scale, std::int64_t shrink)
      : model_(m), dim_(m.map.dim), y_(dim_), acc_(dim_ + 1, std::vector<std::int64_t>(m.facets.size())) {
    const std::size_t nf = m.facets.size();
    bounding_.resize(dim_);
    carried_.resize(dim_);
    rhs_.resize(nf);
    std::int64_t amax = 0, bmax = 0, boxmax = 0;
    for (std::size_t f = 0; f < nf; ++f) {
      const auto& a = m.facets[f].normal;
      std::size_t tail = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] != 0) tail = i;
        amax = std::max(amax, a[i] < 0 ? -a[i] : a[i]);
      }
      bounding_[tail].push_back(f);
      for (std::size_t k = 0; k < tail; ++k) carried_[k].push_back(f);
      bmax = std::max(bmax, m.facets[f].rhs < 0 ? -m.facets[f].rhs : m.facets[f].rhs);
      rhs_[f] = checked_add(checked_mul(scale, m.facets[f].rhs), -shrink);
    }
    lo_.resize(dim_);
    hi_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      lo_[i] = checked_mul(scale, m.lo[i]);
      hi_[i] = checked_mul(scale, m.hi[i]);
      boxmax = std::max({boxmax, lo_[i] < 0 ? -lo_[i] : lo_[i], hi_[i] < 0 ? -hi_[i] : hi_[i]});
    }
    // Partial sums stay below this bound, so the loop itself needs no checks.
    const __int128 bound = static_cast<__int128>(amax) * boxmax * static_cast<__int128>(dim_ + 1) +
                           static_cast<__int128>(bmax) * (scale < 0 ? -scale : scale) + shrink;
    if (bound > (static_cast<__int128>(1) << 62)) throw Error(ErrorCode::kOverflow, "enumeration bound");
  }

  template <class Fn>
  void run(Fn&& fn) {
    if (dim_ == 0) {
      bool ok = true;
      for (std::size_t f = 0; f < rhs_.size(); ++f) ok = ok && rhs_[f] >= 0;
      if (ok) fn(y_);
      return;
    }
    level(0, fn);
  }

 private:
  template <class Fn>
  void level(std::size_t k, Fn& fn) {
    std::int64_t lo = lo_[k], hi = hi_[k];
    for (auto f : bounding_[k]) {
      const std::int64_t a = model_.facets[f].normal[k];
      const std::int64_t r = rhs_[f] - acc_[k][f];
      if (a > 0)
        hi = std::min(hi, floor_div(r, a));
      else
        lo = std::max(lo, ceil_div(r, a));
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      y_[k] = v;
      if (k + 1 == dim_) {
        fn(y_);
        continue;
      }
      for (auto f : carried_[k]) acc_[k + 1][f] = acc_[k][f] + model_.facets[f].normal[k] * v;
      level(k + 1, fn);
    }
  }

  const Model& model_;
  std::size_t dim_;
  Point y_;
  std::vector<std::vector<std::int64_t>> acc_;
  std::vector<std::vector<std::size_t>> bounding_, carried_;
  std::vector<std::int64_t> rhs_;
  Point lo_, hi_;
};

Model build_model(std::size_t d, const std::vector<Point>& vertices) {
  Model m;
  AffineLatticeMap& map = m.map;
  map.ambient_dim = d;
  const Point& v0 = vertices.front();

  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    IntVector e(d);
    for (std::size_t j = 0; j < d; ++j) e[j] = Int(static_cast<long>(vertices[i][j] - v0[j]));
    diffs.push_back(std::move(e));
  }
  const auto normals =
      diffs.empty() ? IntMatrix::identity(d).columns() : kernel_lattice_basis(IntMatrix::from_rows(diffs, d));

  if (normals.empty()) {
    map.dim = d;
    map.base = Point(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      Point e(d, 0);
      e[i] = 1;
      map.basis.push_back(e);
      map.inverse.push_back(e);
    }
  } else {
    map.base = v0;
    const auto basis = kernel_lattice_basis(IntMatrix::from_rows(normals, d));
    map.dim = basis.size();
    for (const auto& b : basis) map.basis.push_back(to_point(b));
    if (!basis.empty()) {
      const HermiteForm form = hnf(IntMatrix::from_rows(basis, d));
      for (std::size_t i = 0; i < map.dim; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (form.h(i, j) != (i == j ? 1 : 0))
            throw Error(ErrorCode::kInternalInconsistency, "direction lattice is not saturated");
      for (std::size_t i = 0; i < map.dim; ++i) map.inverse.push_back(to_point(form.u.column(i)));
    }
    for (const auto& c : normals) {
      HalfSpace h{to_point(c), 0};
      h.rhs = dot(h.normal, v0);
      m.equations.push_back(std::move(h));
    }
  }

  for (const auto& v : vertices) m.vertices.push_back(map.to_model(v));
  std::sort(m.vertices.begin(), m.vertices.end());
  m.facets = detail::full_dim_facets(m.vertices, map.dim);
  m.lo = m.hi = m.vertices.front();
  for (const auto& v : m.vertices)
    for (std::size_t i = 0; i < map.dim; ++i) {
      m.lo[i] = std::min(m.lo[i], v[i]);
      m.hi[i] = std::max(m.hi[i], v[i]);
    }
  return m;
}

std::vector<Point> dedupe(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Polynomial h_star_from_counts(const std::vector<Int>& counts, std::size_t dim) {
  // counts[i] = L(i), counts[0] = 1.
  Polynomial h;
  for (std::size_t i = 0; i <= dim; ++i) {
    Int hi = 0;
    Int binom = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      if (j > 0) binom = binom * Int(static_cast<long>(dim + 2 - j)) / Int(static_cast<long>(j));
      if (j % 2 == 0)
        hi += binom * counts[i - j];
      else
        hi -= binom * counts[i - j];
    }
    if (hi < 0) throw Error(ErrorCode::kInternalInconsistency, "negative h* coefficient");
    if (!hi.fits_slong_p()) throw Error(ErrorCode::kOverflow, "h* coefficient exceeds 64 bits");
    h.push_back(hi.get_si());
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

Point AffineLatticeMap::to_model(const Point& x) const {
  Point y(dim);
  Point shifted(ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) shifted[j] = checked_add(x[j], -base[j]);
  for (std::size_t i = 0; i < dim; ++i) y[i] = dot(inverse[i], shifted);
  return y;
}

Point AffineLatticeMap::from_model(const Point& y) const {
  Point x = base;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) x[j] = checked_add(x[j], checked_mul(y[i], basis[i][j]));
  return x;
}

bool AffineLatticeMap::is_identity() const {
  if (dim != ambient_dim) return false;
  for (auto b : base)
    if (b != 0) return false;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (basis[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

struct LatticePolytope::Cache {
  std::once_flag model_once;
  Model model;
  std::once_flag points_once;
  std::vector<Point> points;
};

LatticePolytope::LatticePolytope(std::size_t ambient_dim, std::vector<Point> points)
    : ambient_dim_(ambient_dim), cache_(std::make_shared<Cache>()) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "polytope without points");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw Error(ErrorCode::kDimensionMismatch, "point dimension");
  points = dedupe(std::move(points));
  if (points.size() <= 2) {
    vertices_ = std::move(points);
    return;
  }
  std::vector<IntVector> exact;
  exact.reserve(points.size());
  for (const auto& p : points) exact.push_back(to_int_vector(p));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<IntVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(exact[j]);
    if (!in_convex_hull(others, exact[i])) vertices_.push_back(points[i]);
  }
}

const LatticePolytope::Cache& LatticePolytope::cache() const {
  std::call_once(cache_->model_once, [this] { cache_->model = build_model(ambient_dim_, vertices_); });
  return *cache_;
}

std::size_t LatticePolytope::dim() const { return cache().model.map.dim; }
const AffineLatticeMap& LatticePolytope::affine_map() const { return cache().model.map; }
const std::vector<Point>& LatticePolytope::model_vertices() const { return cache().model.vertices; }
const std::vector<HalfSpace>& LatticePolytope::model_facets() const { return cache().model.facets; }
const std::vector<HalfSpace>& LatticePolytope::affine_equations() const { return cache().model.equations; }

const std::vector<Point>& LatticePolytope::lattice_points() const {
  const Cache& c = cache();
  std::call_once(cache_->points_once, [this, &c] {
    std::vector<Point> out;
    Enumerator(c.model, 1, 0).run([&](const Point& y) { out.push_back(c.model.map.from_model(y)); });
    std::sort(out.begin(), out.end());
    cache_->points = std::move(out);
  });
  return cache_->points;
}

bool LatticePolytope::contains(const Point& x) const {
  if (x.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "point dimension");
  const Model& m = cache().model;
  for (const auto& e : m.equations)
    if (dot(e.normal, x) != e.rhs) return false;
  const Point y = m.map.to_model(x);
  for (const auto& f : m.facets)
    if (dot(f.normal, y) > f.rhs) return false;
  return true;
}

LatticePolytope polytope_from_columns(const IntMatrix& m) {
  std::vector<Point> pts;
  for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(to_point(m.column(j)));
  return LatticePolytope(m.rows(), std::move(pts));
}

HRep facets(const LatticePolytope& p) {
  const AffineLatticeMap& map = p.affine_map();
  HRep out;
  if (map.is_identity()) {
    out.inequalities = p.model_facets();
    return out;
  }
  for (const auto& f : p.model_facets()) {
    HalfSpace h{Point(map.ambient_dim, 0), f.rhs};
    for (std::size_t i = 0; i < map.dim; ++i)
      for (std::size_t j = 0; j < map.ambient_dim; ++j)
        h.normal[j] = checked_add(h.normal[j], checked_mul(f.normal[i], map.inverse[i][j]));
    h.rhs = checked_add(h.rhs, dot(h.normal, map.base));
    out.inequalities.push_back(std::move(h));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end());
  out.equations = p.affine_equations();
  return out;
}

const std::vector<Point>& lattice_points(const LatticePolytope& p) { return p.lattice_points(); }


namespace {

Model view(const LatticePolytope& p) {
  Model m;
  m.map = p.affine_map();
  m.vertices = p.model_vertices();
  m.facets = p.model_facets();
  m.lo = m.hi = m.vertices.front();
  for (const auto& v : m.vertices)
    for (std::size_t i = 0; i < m.map.dim; ++i) {
      m.lo[i] = std::min(m.lo[i], v[i]);
      m.hi[i] = std::max(m.hi[i], v[i]);
    }
  return m;
}

// Columns (y, 1) for every lattice point y of the model.
IntMatrix homogenized_model_points(const LatticePolytope& p) {
  const Model m = view(p);
  const std::size_t dim = m.map.dim;
  std::vector<IntVector> cols;
  Enumerator(m, 1, 0).run([&](const Point& y) {
    IntVector c = to_int_vector(y);
    c.emplace_back(1);
    cols.push_back(std::move(c));
  });
  return IntMatrix::from_columns(cols, dim + 1);
}

}  // namespace

std::int64_t dilate_count(const LatticePolytope& p, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::kBadParams, "dilation factor must be positive");
  const Model model = view(p);
  std::int64_t count = 0;
  Enumerator(model, m, 0).run([&](const Point&) { ++count; });
  return count;
}

std::vector<Point> interior_lattice_points(const LatticePolytope& p) {
  const Model m = view(p);
  std::vector<Point> out;
  Enumerator(m, 1, 1).run([&](const Point& y) { out.push_back(m.map.from_model(y)); });
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial h_star(const LatticePolytope& p) {
  const std::size_t dim = p.dim();
  std::vector<Int> counts{Int(1)};
  for (std::size_t i = 1; i <= dim; ++i)
    counts.emplace_back(static_cast<long>(dilate_count(p, static_cast<std::int64_t>(i))));
  return h_star_from_counts(counts, dim);
}

Polynomial h_star_generated(const LatticePolytope& p) {
  const std::size_t dim = p.dim();
  const IntMatrix gens = homogenized_model_points(p);
  const HermiteForm form = hnf(gens);
  if (form.rank != dim + 1) throw Error(ErrorCode::kInternalInconsistency, "lattice points do not span");
  bool standard = true;
  for (std::size_t i = 0; i <= dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) standard = standard && form.h(i, j) == (i == j ? 1 : 0);
  if (standard) return h_star(p);

  // (v, k) lies in the generated lattice iff forward substitution against the
  // lower triangular basis stays integral.
  auto member = [&](const Point& y, std::int64_t k) {
    std::vector<Int> c(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      Int r = i < dim ? Int(static_cast<long>(y[i])) : Int(static_cast<long>(k));
      for (std::size_t j = 0; j < i; ++j) r -= form.h(i, j) * c[j];
      if (r % form.h(i, i) != 0) return false;
      c[i] = r / form.h(i, i);
    }
    return true;
  };
  const Model m = view(p);
  std::vector<Int> counts{Int(1)};
  for (std::size_t k = 1; k <= dim; ++k) {
    long count = 0;
    Enumerator(m, static_cast<std::int64_t>(k), 0).run([&](const Point& y) {
      if (member(y, static_cast<std::int64_t>(k))) ++count;
    });
    counts.emplace_back(count);
  }
  return h_star_from_counts(counts, dim);
}

std::optional<Point> reflexive_center(const LatticePolytope& p) {
  const Model m = view(p);
  std::vector<Point> interior;
  Enumerator(m, 1, 1).run([&](const Point& y) { interior.push_back(y); });
  if (interior.size() != 1) return std::nullopt;
  for (const auto& f : m.facets)
    if (f.rhs - dot(f.normal, interior[0]) != 1) return std::nullopt;
  return m.map.from_model(interior[0]);
}

bool is_reflexive(const LatticePolytope& p) { return reflexive_center(p).has_value(); }

std::optional<std::int64_t> gorenstein_index(const LatticePolytope& p) {
  const Polynomial h = h_star(p);
  if (!is_palindromic(h)) return std::nullopt;
  return static_cast<std::int64_t>(p.dim() + 1) - static_cast<std::int64_t>(degree(h));
}

bool is_spanning(const LatticePolytope& p) {
  const SmithInvariants s = smith_invariants(homogenized_model_points(p));
  return s.rank() == p.dim() + 1 && s.all_nonzero_are_one();
}

LatticePolytope negate(const LatticePolytope& p) {
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x = -x;
  return LatticePolytope(p.ambient_dim(), std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, const Point& t) {
  if (t.size() != p.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "translation vector");
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], t[i]);
  return LatticePolytope(p.ambient_dim(), std::move(pts));
}

LatticePolytope scale(const LatticePolytope& p, std::int64_t k) {
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x = checked_mul(x, k);
  return LatticePolytope(p.ambient_dim(), std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw Error(ErrorCode::kDimensionMismatch, "Minkowski sum");
  std::vector<Point> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = checked_add(a[i], b[i]);
      pts.push_back(std::move(s));
    }
  return LatticePolytope(p.ambient_dim(), std::move(pts));
}

LatticePolytope cayley_sum(std::span<const LatticePolytope> ps) {
  if (ps.size() < 2) throw Error(ErrorCode::kBadParams, "Cayley sum needs at least two polytopes");
  const std::size_t d = ps.front().ambient_dim();
  const std::size_t r = ps.size();
  std::vector<Point> pts;
  for (std::size_t i = 0; i < r; ++i) {
    if (ps[i].ambient_dim() != d) throw Error(ErrorCode::kDimensionMismatch, "Cayley sum");
    for (const auto& v : ps[i].vertices()) {
      Point x(r - 1 + d, 0);
      if (i + 1 < r) x[i] = 1;
      std::copy(v.begin(), v.end(), x.begin() + static_cast<std::ptrdiff_t>(r - 1));
      pts.push_back(std::move(x));
    }
  }
  return LatticePolytope(r - 1 + d, std::move(pts));
}

bool check_oda(const LatticePolytope& p, const LatticePolytope& q) {
  std::set<Point> sums;
  for (const auto& a : p.lattice_points())
    for (const auto& b : q.lattice_points()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = checked_add(a[i], b[i]);
      sums.insert(std::move(s));
    }
  const LatticePolytope sum = minkowski_sum(p, q);
  const auto& target = sum.lattice_points();
  for (const auto& s : sums)
    if (!std::binary_search(target.begin(), target.end(), s))
      throw Error(ErrorCode::kInternalInconsistency, "sum of lattice points left P + Q");
  return sums.size() == target.size();
}

IdpCheck idp_check(const LatticePolytope& p, std::int64_t k_max) {
  if (k_max < 1) throw Error(ErrorCode::kBadParams, "k_max must be positive");
  IdpCheck out;
  out.k_max = k_max;
  const Model m = view(p);
  std::vector<Point> base;
  Enumerator(m, 1, 0).run([&](const Point& y) { base.push_back(y); });
  std::set<Point> level(base.begin(), base.end());
  for (std::int64_t k = 2; k <= k_max; ++k) {
    std::set<Point> next;
    for (const auto& a : level)
      for (const auto& b : base) {
        Point s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        next.insert(std::move(s));
      }
    level = std::move(next);
    std::optional<Point> missing;
    std::int64_t count = 0;
    Enumerator(m, k, 0).run([&](const Point& y) {
      ++count;
      if (!missing && !level.contains(y)) missing = y;
    });
    if (missing || count != static_cast<std::int64_t>(level.size())) {
      out.holds = false;
      out.failing_k = k;
      if (missing) {
        Point x = m.map.from_model(*missing);
        for (std::size_t i = 0; i < x.size(); ++i)
          x[i] = checked_add(x[i], checked_mul(k - 1, m.map.base[i]));
        out.witness = std::move(x);
      }
      return out;
    }
  }
  return out;
}

bool is_unimodular_simplex(std::span<const Point> simplex) {
  if (simplex.empty()) throw Error(ErrorCode::kEmptyInput, "empty simplex");
  const std::size_t d = simplex.front().size();
  const std::size_t k = simplex.size() - 1;
  if (k == 0) return true;
  IntMatrix edges(d, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (simplex[j + 1].size() != d) throw Error(ErrorCode::kDimensionMismatch, "simplex vertex");
    for (std::size_t i = 0; i < d; ++i)
      edges(i, j) = Int(static_cast<long>(simplex[j + 1][i] - simplex[0][i]));
  }
  const SmithInvariants s = smith_invariants(edges);
  return s.rank() == k && s.all_nonzero_are_one();
}

std::pair<LatticePolytope, AffineLatticeMap> full_dim_model(const LatticePolytope& p) {
  return {LatticePolytope(p.dim(), p.model_vertices()), p.affine_map()};
}

bool is_palindromic(const Polynomial& h) {
  if (h.empty()) return true;
  const std::size_t s = degree(h);
  for (std::size_t i = 0; i <= s; ++i)
    if (h[i] != h[s - i]) return false;
  return true;
}

std::size_t degree(const Polynomial& h) {
  std::size_t s = h.size();
  while (s > 1 && h[s - 1] == 0) --s;
  return s == 0 ? 0 : s - 1;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace nefcert
