#include <algorithm>

#include "nefcert/kernels.hpp"

namespace nefcert::kernels {
namespace {

bool divides(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

void lcm(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void gcd(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

void add(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

std::size_t first_difference(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

std::int64_t degree(const Exp* a, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

Exp max_entry(const Exp* a, std::size_t n) {
  Exp m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

}  // namespace

const ExponentOps& scalar_ops() {
  static const ExponentOps ops{"scalar", divides, coprime, lcm, gcd, add, sub,
                               first_difference, degree, max_entry};
  return ops;
}

}  // namespace nefcert::kernels
