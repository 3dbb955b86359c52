#pragma once
// Inner-loop arithmetic kernels with a scalar reference implementation and
// SIMD variants (AVX2+FMA on x86-64, NEON on aarch64) chosen at runtime.
//
// The scalar table is the reference: every SIMD variant must agree with it to
// within floating-point reassociation error (see tests/test_kernels.cpp).
// Setting GODISC_KERNELS=scalar in the environment pins the scalar table.

#include <cstddef>
#include <span>

namespace godisc::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // Upper triangle (including diagonal) of the row-major m-by-m matrix s
  // accumulates x * x^T. The strict lower triangle is not touched.
  void (*rank1_upper)(const double* x, double* s, std::size_t m);
};

const KernelTable& scalar_kernels() noexcept;

/// SIMD table for this build and CPU, or nullptr when unavailable.
const KernelTable* simd_kernels() noexcept;

/// Table used by the library; resolved once on first use.
const KernelTable& active_kernels() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return active_kernels().dot(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  return active_kernels().squared_distance(a.data(), b.data(), a.size());
}

inline void rank1_upper(std::span<const double> x, std::span<double> s) noexcept {
  active_kernels().rank1_upper(x.data(), s.data(), x.size());
}

}  // namespace godisc::kernels
