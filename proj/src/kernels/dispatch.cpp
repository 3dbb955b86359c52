#include <cstdlib>
#include <cstring>

#include "godisc/kernels.hpp"

namespace godisc::kernels {

#if defined(GODISC_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(GODISC_HAVE_NEON)
const KernelTable& neon_kernels() noexcept;
#endif

const KernelTable* simd_kernels() noexcept {
#if defined(GODISC_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_kernels();
  return nullptr;
#elif defined(GODISC_HAVE_NEON)
  // NEON is mandatory on aarch64.
  return &neon_kernels();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* pin = std::getenv("GODISC_KERNELS");
    if (pin != nullptr && std::strcmp(pin, "scalar") == 0) return scalar_kernels();
    if (const KernelTable* simd = simd_kernels()) return *simd;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace godisc::kernels
