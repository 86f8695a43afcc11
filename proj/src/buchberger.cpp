// Buchberger's algorithm specialised to binomials.
//
// Internally exponents live in "ranked" coordinates: slot 0 holds the
// smallest variable, and storage is padded to kernels::kLaneWidth so the
// exponent kernels run without tails. Grevlex then reads: higher degree
// wins; otherwise the first differing slot decides and the monomial with
// the smaller exponent there is the larger one.

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "nefcert/error.hpp"
#include "nefcert/kernels.hpp"
#include "nefcert/toric.hpp"

namespace nefcert {

using kernels::Exp;

std::int64_t degree(const Exponent& e) {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

bool is_squarefree(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x <= 1; });
}

Binomial binomial_from_vector(const IntVector& u) {
  Binomial b{Exponent(u.size(), 0), Exponent(u.size(), 0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].fits_sint_p()) throw Error(ErrorCode::kOverflow, "exponent exceeds 32 bits");
    const int x = static_cast<int>(u[i].get_si());
    if (x > 0) b.plus[i] = x;
    if (x < 0) b.minus[i] = -x;
  }
  return b;
}

TermOrder::TermOrder(std::vector<std::size_t> ranking) : ranking_(std::move(ranking)) {
  position_.assign(ranking_.size(), ranking_.size());
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    if (ranking_[r] >= ranking_.size() || position_[ranking_[r]] != ranking_.size())
      throw Error(ErrorCode::kBadParams, "variable ranking is not a permutation");
    position_[ranking_[r]] = r;
  }
}

TermOrder TermOrder::with_smallest(std::size_t n, std::size_t smallest) {
  std::vector<std::size_t> r{smallest};
  for (std::size_t v = 0; v < n; ++v)
    if (v != smallest) r.push_back(v);
  return TermOrder(std::move(r));
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  const auto da = nefcert::degree(a), db = nefcert::degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (auto v : ranking_)
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  return 0;
}

namespace {

class Engine {
 public:
  explicit Engine(const TermOrder& order)
      : order_(order), n_(order.size()), width_(kernels::padded_length(order.size())),
        ops_(kernels::active_ops()) {}

  struct Elem {
    std::vector<Exp> lead, trail;
    std::int64_t deg = 0;
  };

  std::vector<Exp> ranked(const Exponent& e) const {
    std::vector<Exp> r(width_, 0);
    for (std::size_t p = 0; p < n_; ++p) r[p] = e[order_.ranking()[p]];
    return r;
  }

  Exponent unranked(const std::vector<Exp>& r) const {
    Exponent e(n_, 0);
    for (std::size_t p = 0; p < n_; ++p) e[order_.ranking()[p]] = r[p];
    return e;
  }

  int compare(const std::vector<Exp>& a, const std::vector<Exp>& b) const {
    const auto da = ops_.degree(a.data(), width_), db = ops_.degree(b.data(), width_);
    if (da != db) return da < db ? -1 : 1;
    const std::size_t p = ops_.first_difference(a.data(), b.data(), width_);
    if (p == width_) return 0;
    return a[p] < b[p] ? 1 : -1;
  }

  // Rewrites m with lead -> trail steps until no leading monomial divides it.
  void normalize(std::vector<Exp>& m, const std::vector<Elem>& basis, const std::vector<bool>* live) const {
    std::vector<Exp> tmp(width_);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (live && !(*live)[k]) continue;
        if (!ops_.divides(basis[k].lead.data(), m.data(), width_)) continue;
        ops_.sub(m.data(), basis[k].lead.data(), tmp.data(), width_);
        ops_.add(tmp.data(), basis[k].trail.data(), m.data(), width_);
        again = true;
        break;
      }
    }
  }

  // Cancels the common factor and orients; nullopt for zero.
  std::optional<Elem> make(std::vector<Exp> a, std::vector<Exp> b) const {
    std::vector<Exp> g(width_), tmp(width_);
    ops_.gcd(a.data(), b.data(), g.data(), width_);
    ops_.sub(a.data(), g.data(), tmp.data(), width_);
    a.swap(tmp);
    ops_.sub(b.data(), g.data(), tmp.data(), width_);
    b.swap(tmp);
    const int c = compare(a, b);
    if (c == 0) return std::nullopt;
    if (c < 0) a.swap(b);
    Elem e;
    e.deg = ops_.degree(a.data(), width_);
    e.lead = std::move(a);
    e.trail = std::move(b);
    return e;
  }

  std::optional<Elem> reduce(std::vector<Exp> a, std::vector<Exp> b, const std::vector<Elem>& basis,
                             const std::vector<bool>* live) const {
    normalize(a, basis, live);
    normalize(b, basis, live);
    return make(std::move(a), std::move(b));
  }

  // Full Buchberger run; returns a (non-reduced) Groebner basis.
  std::vector<Elem> run(std::vector<Elem> basis) const {
    // Pairs keyed by (lcm degree, j, i) for a deterministic normal strategy.
    std::set<std::tuple<std::int64_t, std::size_t, std::size_t>> queue;
    std::vector<std::vector<bool>> pending;
    std::vector<Exp> lcm(width_);

    auto add_pairs = [&](std::size_t j) {
      pending.emplace_back(j + 1, false);
      for (std::size_t i = 0; i < j; ++i) {
        if (ops_.coprime(basis[i].lead.data(), basis[j].lead.data(), width_)) continue;
        ops_.lcm(basis[i].lead.data(), basis[j].lead.data(), lcm.data(), width_);
        queue.emplace(ops_.degree(lcm.data(), width_), j, i);
        pending[j][i] = true;
      }
    };
    auto is_pending = [&](std::size_t a, std::size_t b) {
      return a > b ? pending[a][b] : pending[b][a];
    };

    const std::size_t initial = basis.size();
    std::vector<Elem> seed = std::move(basis);
    basis.clear();
    for (std::size_t k = 0; k < initial; ++k) {
      auto r = reduce(seed[k].lead, seed[k].trail, basis, nullptr);
      if (!r) continue;
      basis.push_back(std::move(*r));
      add_pairs(basis.size() - 1);
    }

    std::vector<Exp> sa(width_), sb(width_), tmp(width_), other(width_);
    while (!queue.empty()) {
      const auto [deg, j, i] = *queue.begin();
      queue.erase(queue.begin());
      pending[j][i] = false;
      ops_.lcm(basis[i].lead.data(), basis[j].lead.data(), lcm.data(), width_);

      // Chain criterion: some lead divides the lcm, both companion pairs have
      // strictly smaller lcms and are already settled.
      bool skip = false;
      auto strictly_below = [&](std::size_t a, std::size_t k) {
        ops_.lcm(basis[a].lead.data(), basis[k].lead.data(), other.data(), width_);
        return ops_.first_difference(other.data(), lcm.data(), width_) != width_;
      };
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == i || k == j) continue;
        if (!ops_.divides(basis[k].lead.data(), lcm.data(), width_)) continue;
        if (is_pending(i, k) || is_pending(j, k)) continue;
        if (strictly_below(i, k) && strictly_below(j, k)) skip = true;
      }
      if (skip) continue;

      // S = (L / lead_i) trail_i - (L / lead_j) trail_j.
      ops_.sub(lcm.data(), basis[i].lead.data(), tmp.data(), width_);
      ops_.add(tmp.data(), basis[i].trail.data(), sa.data(), width_);
      ops_.sub(lcm.data(), basis[j].lead.data(), tmp.data(), width_);
      ops_.add(tmp.data(), basis[j].trail.data(), sb.data(), width_);
      auto r = reduce(sa, sb, basis, nullptr);
      if (!r) continue;
      basis.push_back(std::move(*r));
      add_pairs(basis.size() - 1);
    }
    return basis;
  }

  // Minimal, tail-reduced, sorted; nullopt when tail reduction exposed a
  // common factor and the run has to be repeated with the new element.
  std::optional<std::vector<Elem>> finalize(std::vector<Elem>& basis) const {
    std::vector<bool> live(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size() && live[a]; ++b) {
        if (a == b || !live[b]) continue;
        if (!ops_.divides(basis[b].lead.data(), basis[a].lead.data(), width_)) continue;
        // Equal leads: keep the earlier element.
        if (ops_.first_difference(basis[a].lead.data(), basis[b].lead.data(), width_) == width_ && a < b)
          continue;
        live[a] = false;
      }
    }
    std::vector<Elem> out;
    bool cancelled = false;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (!live[a]) continue;
      std::vector<Exp> t = basis[a].trail;
      normalize(t, basis, &live);
      auto e = make(basis[a].lead, t);
      if (!e) throw Error(ErrorCode::kInternalInconsistency, "basis element reduced to zero");
      if (e->lead != basis[a].lead) {
        cancelled = true;
        basis.push_back(std::move(*e));
        continue;
      }
      out.push_back(std::move(*e));
    }
    if (cancelled) return std::nullopt;
    std::sort(out.begin(), out.end(), [&](const Elem& x, const Elem& y) { return compare(x.lead, y.lead) < 0; });
    return out;
  }

  const TermOrder& order_;
  std::size_t n_;
  std::size_t width_;
  const kernels::ExponentOps& ops_;
};

}  // namespace

GroebnerBasis buchberger_reduced(std::vector<Binomial> gens, const TermOrder& order) {
  const std::size_t n = order.size();
  Engine engine(order);
  std::vector<Engine::Elem> basis;
  for (const auto& g : gens) {
    if (g.plus.size() != n || g.minus.size() != n)
      throw Error(ErrorCode::kDimensionMismatch, "binomial length differs from the variable count");
    for (std::size_t v = 0; v < n; ++v)
      if (g.plus[v] < 0 || g.minus[v] < 0) throw Error(ErrorCode::kBadParams, "negative exponent");
    if (degree(g.plus) != degree(g.minus))
      throw Error(ErrorCode::kNonHomogeneousInput, "binomial is not homogeneous");
    auto e = engine.make(engine.ranked(g.plus), engine.ranked(g.minus));
    if (e) basis.push_back(std::move(*e));
  }

  GroebnerBasis out{order, {}, true};
  while (true) {
    basis = engine.run(std::move(basis));
    auto done = engine.finalize(basis);
    if (!done) continue;
    for (const auto& e : *done) out.elements.push_back({engine.unranked(e.lead), engine.unranked(e.trail)});
    return out;
  }
}

Exponent normal_form(const Exponent& m, const GroebnerBasis& g) {
  Exponent r = m;
  bool again = true;
  while (again) {
    again = false;
    for (const auto& b : g.elements) {
      bool divides = true;
      for (std::size_t v = 0; v < r.size() && divides; ++v) divides = b.plus[v] <= r[v];
      if (!divides) continue;
      for (std::size_t v = 0; v < r.size(); ++v) r[v] += b.minus[v] - b.plus[v];
      again = true;
      break;
    }
  }
  return r;
}

bool reduces_to_zero(const Binomial& f, const GroebnerBasis& g) {
  return normal_form(f.plus, g) == normal_form(f.minus, g);
}

}  // namespace nefcert
