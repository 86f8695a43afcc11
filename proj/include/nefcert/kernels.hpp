#pragma once

// Exponent-vector kernels for the binomial Groebner engine. A scalar
// reference implementation is always built; an AVX2 variant is compiled on
// x86-64 and selected at runtime when the CPU supports it. Both must agree
// bit for bit (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace nefcert::kernels {

using Exp = std::int32_t;

/// Lane count of the widest variant; monomials pad their storage to a
/// multiple of this so vector loops need no tail handling.
inline constexpr std::size_t kLaneWidth = 8;

constexpr std::size_t padded_length(std::size_t n) {
  return (n + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

struct ExponentOps {
  std::string_view name;
  // a_i <= b_i for all i
  bool (*divides)(const Exp* a, const Exp* b, std::size_t n);
  // no i with a_i > 0 and b_i > 0
  bool (*coprime)(const Exp* a, const Exp* b, std::size_t n);
  void (*lcm)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  void (*gcd)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  void (*add)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  void (*sub)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  // index of the first differing entry, or n when equal
  std::size_t (*first_difference)(const Exp* a, const Exp* b, std::size_t n);
  std::int64_t (*degree)(const Exp* a, std::size_t n);
  Exp (*max_entry)(const Exp* a, std::size_t n);
};

const ExponentOps& scalar_ops();

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const ExponentOps* avx2_ops();

/// The variant used by the engine: AVX2 when available unless the
/// environment variable NEFCERT_KERNELS is set to "scalar".
const ExponentOps& active_ops();

}  // namespace nefcert::kernels
