#include "nefcert/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "nefcert/error.hpp"

namespace nefcert {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::kDimensionMismatch, "ragged column list");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) m(i, k) = (*this)(i, indices[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix m(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(indices[k], j);
  return m;
}

IntMatrix IntMatrix::with_ones_row() const {
  IntMatrix m(rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t j = 0; j < cols_; ++j) m(rows_, j) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

// Dense row-major working copy used by the elimination routines.
struct Work {
  std::size_t rows, cols;
  std::vector<Int> a;

  explicit Work(const IntMatrix& m) : rows(m.rows()), cols(m.cols()), a(rows * cols) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  }
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  void swap_rows(std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(s, j));
  }
};

// Fraction-free elimination to row echelon form; returns the rank.
std::size_t bareiss_echelon(Work& w) {
  std::size_t r = 0;
  Int prev = 1;
  Int tmp;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t p = r;
    while (p < w.rows && w.at(p, c) == 0) ++p;
    if (p == w.rows) continue;
    if (p != r) w.swap_rows(p, r);
    for (std::size_t i = r + 1; i < w.rows; ++i) {
      for (std::size_t j = c + 1; j < w.cols; ++j) {
        tmp = w.at(r, c) * w.at(i, j) - w.at(i, c) * w.at(r, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, c) = 0;
    }
    prev = w.at(r, c);
    ++r;
  }
  return r;
}

// Bareiss determinant of the n x n matrix stored row-major in `a` (destroyed).
Int bareiss_det(std::vector<Int>& a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  Int tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  Int det = a[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return det;
}

// Visits every k-subset of {0..n-1} in lexicographic order until `fn` returns false.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls fn(|minor|) for every nonzero maximal minor until fn returns false.
template <typename Fn>
void for_each_maximal_minor(const IntMatrix& m, Fn&& fn) {
  const std::vector<std::size_t> basis = row_basis(m);
  const std::size_t r = basis.size();
  if (r == 0) return;
  const IntMatrix sub = m.select_rows(basis);
  std::vector<Int> scratch(r * r);
  for_each_combination(sub.cols(), r, [&](std::span<const std::size_t> cols) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) scratch[i * r + j] = sub(i, cols[j]);
    Int det = bareiss_det(scratch, r);
    if (det == 0) return true;
    return fn(Int(abs(det)));
  });
}

void add_column_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// (col_k, col_j) <- (s col_k + t col_j, -(b/g) col_k + (a/g) col_j); determinant 1.
void combine_columns(IntMatrix& m, std::size_t k, std::size_t j, const Int& s, const Int& t,
                     const Int& bg, const Int& ag) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int ck = m(i, k);
    Int cj = m(i, j);
    m(i, k) = s * ck + t * cj;
    m(i, j) = ag * cj - bg * ck;
  }
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  Work w(m);
  return bareiss_echelon(w);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  Work w(m);
  return bareiss_det(w.a, m.rows());
}

std::vector<std::size_t> row_basis(const IntMatrix& m) {
  std::vector<std::size_t> chosen;
  std::size_t current = 0;
  for (std::size_t i = 0; i < m.rows() && current < m.cols(); ++i) {
    std::vector<std::size_t> trial = chosen;
    trial.push_back(i);
    if (rank(m.select_rows(trial)) > current) {
      chosen = std::move(trial);
      ++current;
    }
  }
  return chosen;
}

std::vector<Int> maximal_minor_profile(const IntMatrix& m) {
  std::vector<Int> out;
  for_each_maximal_minor(m, [&](Int v) {
    out.push_back(std::move(v));
    return true;
  });
  return out;
}

bool is_unimodular(const IntMatrix& m) {
  if (rank(m) != m.rows()) return false;
  std::optional<Int> first;
  bool ok = true;
  for_each_maximal_minor(m, [&](Int v) {
    if (!first) {
      first = std::move(v);
      return true;
    }
    if (v != *first) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = m.cols();
  std::size_t k = 0;
  Int g, s, t, ag, bg, q;
  for (std::size_t i = 0; i < m.rows() && k < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      const Int a = h(i, k);
      const Int b = h(i, j);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      combine_columns(h, k, j, s, t, bg, ag);
      combine_columns(u, k, j, s, t, bg, ag);
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      negate_column(h, k);
      negate_column(u, k);
    }
    for (std::size_t c = 0; c < k; ++c) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(i, k).get_mpz_t());
      if (q == 0) continue;
      add_column_multiple(h, c, k, -q);
      add_column_multiple(u, c, k, -q);
    }
    ++k;
  }
  out.rank = k;
  return out;
}

std::size_t SmithInvariants::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Int& v) { return v != 0; }));
}

Int SmithInvariants::product() const {
  Int p = 1;
  for (const Int& v : diagonal)
    if (v != 0) p *= v;
  return p;
}

bool SmithInvariants::all_nonzero_are_one() const {
  return std::all_of(diagonal.begin(), diagonal.end(), [](const Int& v) { return v == 0 || v == 1; });
}

SmithInvariants smith_invariants(const IntMatrix& m) {
  Work w(m);
  const std::size_t rows = w.rows;
  const std::size_t cols = w.cols;
  const std::size_t lim = std::min(rows, cols);
  Int q;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, a), w.at(i, b));
  };
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (w.at(i, j) != 0 && (pr == rows || abs(w.at(i, j)) < abs(w.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    w.swap_rows(t, pr);
    swap_cols(t, pc);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.at(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.at(i, t).get_mpz_t(), w.at(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) w.at(i, j) -= q * w.at(t, j);
        if (w.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.at(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.at(t, j).get_mpz_t(), w.at(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) w.at(i, j) -= q * w.at(i, t);
        if (w.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder survived in the pivot row or column; move it in.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (w.at(i, t) != 0 && abs(w.at(i, t)) < abs(w.at(br, bc))) { br = i; bc = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.at(t, j) != 0 && abs(w.at(t, j)) < abs(w.at(br, bc))) { br = t; bc = j; }
        w.swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Divisibility: fold any offending row into the pivot row and repeat.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(w.at(i, j).get_mpz_t(), w.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) w.at(t, j) += w.at(bad, j);
    }
  }
  SmithInvariants out;
  out.diagonal.resize(lim);
  for (std::size_t t = 0; t < lim; ++t) out.diagonal[t] = abs(w.at(t, t));
  return out;
}

std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m) {
  const HermiteForm form = hnf(m);
  const std::size_t n = m.cols();
  const std::size_t k = n - form.rank;
  if (k == 0) return {};
  IntMatrix basis(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) basis(i, j) = form.u(i, form.rank + j);
  const HermiteForm canon = hnf(basis);
  std::vector<IntVector> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) out.push_back(canon.h.column(j));
  return out;
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b) {
  // Solve m^T x = b: n equations in d unknowns.
  const std::size_t d = m.rows();
  const std::size_t n = m.cols();
  if (b.size() != n) throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m(j, i);
    a[i][d] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j <= d; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j <= d; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][d] != 0) return std::nullopt;
  RatVector x(d);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = a[i][d];
  return x;
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nefcert
