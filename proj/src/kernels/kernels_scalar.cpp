#include "godisc/kernels.hpp"

namespace godisc::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void rank1_upper_scalar(const double* x, double* s, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = x[i];
    double* row = s + i * m;
    for (std::size_t j = i; j < m; ++j) row[j] += xi * x[j];
  }
}

constexpr KernelTable kScalarTable{
    Isa::Scalar, "scalar", dot_scalar, axpy_scalar, squared_distance_scalar, rank1_upper_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalarTable; }

}  // namespace godisc::kernels
