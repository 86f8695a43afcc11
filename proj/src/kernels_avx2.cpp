// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "nefcert/kernels.hpp"

namespace nefcert::kernels {
namespace {

inline __m256i load(const Exp* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Exp* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

bool divides(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i gt = _mm256_cmpgt_epi32(load(a + i), load(b + i));
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Exp* a, const Exp* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i pa = _mm256_cmpgt_epi32(load(a + i), zero);
    const __m256i pb = _mm256_cmpgt_epi32(load(b + i), zero);
    if (!_mm256_testz_si256(pa, pb)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

template <typename Vec, typename Scalar>
inline void binary(const Exp* a, const Exp* b, Exp* out, std::size_t n, Vec vf, Scalar sf) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(out + i, vf(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = sf(a[i], b[i]);
}

void lcm(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  binary(a, b, out, n, [](__m256i x, __m256i y) { return _mm256_max_epi32(x, y); },
         [](Exp x, Exp y) { return std::max(x, y); });
}

void gcd(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  binary(a, b, out, n, [](__m256i x, __m256i y) { return _mm256_min_epi32(x, y); },
         [](Exp x, Exp y) { return std::min(x, y); });
}

void add(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  binary(a, b, out, n, [](__m256i x, __m256i y) { return _mm256_add_epi32(x, y); },
         [](Exp x, Exp y) { return x + y; });
}

void sub(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  binary(a, b, out, n, [](__m256i x, __m256i y) { return _mm256_sub_epi32(x, y); },
         [](Exp x, Exp y) { return x - y; });
}

std::size_t first_difference(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load(a + i), load(b + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
    if (mask != 0xFFu) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xFFu));
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

std::int64_t degree(const Exp* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = load(a + i);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += a[i];
  return s;
}

Exp max_entry(const Exp* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = _mm256_max_epi32(acc, load(a + i));
  alignas(32) Exp lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Exp m = *std::max_element(lanes, lanes + 8);
  for (; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

}  // namespace

const ExponentOps& avx2_ops_table() {
  static const ExponentOps ops{"avx2", divides, coprime, lcm, gcd, add, sub,
                               first_difference, degree, max_entry};
  return ops;
}

}  // namespace nefcert::kernels
