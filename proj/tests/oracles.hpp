#pragma once

// Independent reference routines for Groebner-basis checks. Nothing here
// calls into the engine's term order or reduction code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "nefcert/linalg.hpp"
#include "nefcert/toric.hpp"

namespace nefcert::oracle {

using Mono = std::vector<std::int32_t>;

inline std::int64_t total_degree(const Mono& m) {
  std::int64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded reverse lexicographic comparison; `ranking` lists the variables
// from smallest to largest. Returns true when a > b.
inline bool grevlex_greater(const Mono& a, const Mono& b, const std::vector<std::size_t>& ranking) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t v : ranking)
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

inline bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Poly {
  Mono lead, tail;  // lead > tail, or both equal (the zero binomial)
};

inline Poly orient(Mono a, Mono b, const std::vector<std::size_t>& ranking) {
  if (grevlex_greater(b, a, ranking)) std::swap(a, b);
  return {a, b};
}

// Reduces the binomial a - b modulo the basis; true iff it vanishes. With a
// binomial basis every reduction step keeps a binomial, so the loop ends in
// either equal terms (zero) or an irreducible leading term.
inline bool reduces_to_zero(const Mono& a, const Mono& b, const std::vector<Poly>& basis,
                            const std::vector<std::size_t>& ranking) {
  Poly f = orient(a, b, ranking);
  for (std::size_t guard = 0; guard < 1000000; ++guard) {
    if (f.lead == f.tail) return true;
    const Poly* g = nullptr;
    for (const auto& h : basis)
      if (divides(h.lead, f.lead)) {
        g = &h;
        break;
      }
    if (g == nullptr) return false;
    Mono next(f.lead.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = f.lead[i] - g->lead[i] + g->tail[i];
    f = orient(next, f.tail, ranking);
  }
  return false;
}

inline std::vector<Poly> as_polys(const GroebnerBasis& g) {
  std::vector<Poly> out;
  for (const auto& b : g.elements) out.push_back(orient(b.plus, b.minus, g.order.ranking()));
  return out;
}

// Every S-binomial of the basis reduces to zero.
inline bool s_pairs_reduce(const GroebnerBasis& g, std::size_t* pairs_checked = nullptr) {
  const auto basis = as_polys(g);
  const auto& ranking = g.order.ranking();
  std::size_t count = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Poly &p = basis[i], &q = basis[j];
      Mono l(p.lead.size());
      for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(p.lead[k], q.lead[k]);
      Mono sp(l.size()), sq(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) {
        sp[k] = l[k] - p.lead[k] + p.tail[k];
        sq[k] = l[k] - q.lead[k] + q.tail[k];
      }
      ++count;
      if (!reduces_to_zero(sp, sq, basis, ranking)) return false;
    }
  if (pairs_checked) *pairs_checked = count;
  return true;
}

// Leads are the larger term, no term of any element is divisible by the lead
// of another element, and no lead is divisible by another lead.
inline bool is_reduced(const GroebnerBasis& g) {
  const auto& ranking = g.order.ranking();
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const auto& b = g.elements[i];
    if (!grevlex_greater(b.plus, b.minus, ranking)) return false;
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      if (i == j) continue;
      if (divides(g.elements[j].plus, b.plus) || divides(g.elements[j].plus, b.minus)) return false;
    }
  }
  return true;
}

// Every element lies in the toric ideal of `a`: A(plus - minus) = 0.
inline bool in_kernel(const GroebnerBasis& g, const IntMatrix& a) {
  for (const auto& b : g.elements) {
    IntVector u(b.plus.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = b.plus[i] - b.minus[i];
    for (const auto& x : a * u)
      if (x != 0) return false;
  }
  return true;
}

// Saturation check: all monomials of degree <= max_degree are bucketed by
// their image under A; inside a bucket every pair must reduce to zero, and
// across buckets never. Returns the number of monomials inspected, or -1.
inline long fiber_check(const GroebnerBasis& g, const IntMatrix& a, int max_degree) {
  const std::size_t n = a.cols();
  const auto basis = as_polys(g);
  const auto& ranking = g.order.ranking();
  std::map<std::vector<Int>, std::vector<Mono>> fibers;
  Mono m(n, 0);
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      IntVector u(m.begin(), m.end());
      fibers[a * u].push_back(m);
      ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, max_degree);
  for (const auto& [image, monos] : fibers)
    for (std::size_t k = 1; k < monos.size(); ++k)
      if (!reduces_to_zero(monos[0], monos[k], basis, ranking)) return -1;
  // distinct fibers never collapse: normal forms of fiber representatives differ
  std::vector<Mono> reps;
  for (const auto& [image, monos] : fibers) reps.push_back(monos[0]);
  for (std::size_t i = 0; i < reps.size() && i < 200; ++i)
    for (std::size_t j = i + 1; j < reps.size() && j < 200; ++j)
      if (total_degree(reps[i]) == total_degree(reps[j]) && reduces_to_zero(reps[i], reps[j], basis, ranking))
        return -1;
  return count;
}

}  // namespace nefcert::oracle
