#include <cstdlib>
#include <string_view>

#include "nefcert/kernels.hpp"

namespace nefcert::kernels {

#if defined(NEFCERT_HAVE_AVX2)
const ExponentOps& avx2_ops_table();
#endif

const ExponentOps* avx2_ops() {
#if defined(NEFCERT_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &avx2_ops_table();
#endif
  return nullptr;
}

const ExponentOps& active_ops() {
  static const ExponentOps& chosen = [] () -> const ExponentOps& {
    const char* env = std::getenv("NEFCERT_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_ops();
    if (const ExponentOps* v = avx2_ops()) return *v;
    return scalar_ops();
  }();
  return chosen;
}

}  // namespace nefcert::kernels
